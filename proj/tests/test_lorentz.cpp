#include <doctest.h>

#include "gonil/linalg.hpp"
#include "gonil/lorentz.hpp"
#include "support.hpp"

using namespace gonil;

namespace {

struct Pair {
    Matrix b, g;
};

// B' = Q^{-1} B Q and G' = Q^T G Q describe the same operator in the basis given by Q's columns.
Pair conjugate(const Matrix& b, const Matrix& g, const Matrix& q) {
    const auto qi = inverse(q);
    REQUIRE(qi);
    return {oracle::mul(oracle::mul(*qi, b), q), oracle::mul(oracle::mul(oracle::transpose(q), g), q)};
}

void check_witness(const Pair& pr, const CanonicalForm& cf, std::size_t p) {
    const Matrix& w = cf.witness;
    CHECK_FALSE(oracle::det(w).is_zero());
    // B P = P C avoids inverting P in the oracle.
    CHECK(oracle::mul(pr.b, w) == oracle::mul(w, oracle::canonical_nilpotent(p)));
    CHECK(oracle::mul(oracle::mul(oracle::transpose(w), pr.g), w) == oracle::canonical_gram(p));
}

}  // namespace

TEST_CASE("canonical pair matches the oracle construction and is skew") {
    for (std::size_t p : {0u, 1u, 2u, 5u}) {
        CHECK(canonical_nilpotent_matrix(p) == oracle::canonical_nilpotent(p));
        CHECK(canonical_nilpotent_gram(p) == oracle::canonical_gram(p));
        CHECK(oracle::skew_wrt(oracle::canonical_nilpotent(p), oracle::canonical_gram(p)));
        CHECK(check_skew(canonical_nilpotent_matrix(p), BilinearForm(canonical_nilpotent_gram(p))));
    }
    CHECK_FALSE(check_skew(Matrix{{1, 0}, {0, 0}}, BilinearForm(Matrix::identity(2))));
    CHECK_THROWS_AS(check_skew(Matrix::identity(2), BilinearForm(Matrix{{1, 0}, {0, 0}})), InputError);
    CHECK_THROWS_AS(check_skew(Matrix::identity(3), BilinearForm(Matrix::identity(2))), InputError);
}

TEST_CASE("classification of skew operators") {
    const BilinearForm mink(Matrix::diagonal(Vector{-1, 1, 1}));
    CHECK(classify(Matrix(3, 3), mink).kind == CanonicalKind::Zero);

    const Classification boost = classify(Matrix{{0, 2, 0}, {2, 0, 0}, {0, 0, 0}}, mink);
    CHECK(boost.kind == CanonicalKind::Semisimple);
    CHECK(boost.mu == Rational(-2));

    const Classification rot = classify(Matrix{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}, mink);
    CHECK(rot.kind == CanonicalKind::Semisimple);
    CHECK(rot.mu == Rational(0));

    // Eigenvalues ±sqrt(2): no exact rational μ.
    const Classification irr = classify(Matrix{{0, 1, 0}, {2, 0, 0}, {0, 0, 0}},
                                        BilinearForm(Matrix::diagonal(Vector{-2, 1, 1})));
    CHECK(irr.kind == CanonicalKind::UndecidedExact);
    REQUIRE(irr.mu_estimate);
    CHECK(*irr.mu_estimate == doctest::Approx(-1.41421356).epsilon(1e-6));

    const Classification nil = classify(canonical_nilpotent_matrix(1), BilinearForm(canonical_nilpotent_gram(1)));
    CHECK(nil.kind == CanonicalKind::NonSemisimple);
    CHECK(nil.minimal_polynomial == Polynomial({0, 0, 0, 1}));

    // Either Lorentz convention is accepted.
    CHECK(classify(Matrix{{0, 2, 0}, {2, 0, 0}, {0, 0, 0}}, BilinearForm(Matrix::diagonal(Vector{1, -1, -1})))
              .kind == CanonicalKind::Semisimple);
    CHECK_THROWS_AS(classify(Matrix(3, 3), BilinearForm(Matrix::identity(3))), InputError);
    CHECK_THROWS_AS(classify(Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, mink), InputError);
}

TEST_CASE("witness basis: identity on the canonical pair") {
    const CanonicalForm cf = nilpotent_witness_basis(canonical_nilpotent_matrix(0), BilinearForm(canonical_nilpotent_gram(0)));
    CHECK(cf.witness == Matrix::identity(3));
    CHECK(cf.flags.empty());
}

TEST_CASE("witness basis after swapping e1 and e2") {
    const Matrix q{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    const Pair pr = conjugate(oracle::canonical_nilpotent(0), oracle::canonical_gram(0), q);
    const CanonicalForm cf = nilpotent_witness_basis(pr.b, BilinearForm(pr.g));
    CHECK(cf.canonical_matrix == oracle::canonical_nilpotent(0));
    check_witness(pr, cf, 0);
}

TEST_CASE("witness basis on random conjugates, p up to 3") {
    oracle::Rng rng(101);
    std::size_t flagged = 0;
    for (int t = 0; t < 40; ++t) {
        const auto p = static_cast<std::size_t>(t % 4);
        const Pair pr = conjugate(oracle::canonical_nilpotent(p), oracle::canonical_gram(p), oracle::invertible(rng, p + 3));
        const CanonicalForm cf = nilpotent_witness_basis(pr.b, BilinearForm(pr.g));
        if (!cf.flags.empty()) {
            ++flagged;
            // A flagged result still has the canonical matrix shape, with the scaled Gram reported.
            CHECK(oracle::mul(pr.b, cf.witness) == oracle::mul(cf.witness, cf.canonical_matrix));
            CHECK(oracle::mul(oracle::mul(oracle::transpose(cf.witness), pr.g), cf.witness) == cf.canonical_gram);
            continue;
        }
        check_witness(pr, cf, p);
    }
    MESSAGE("flagged witnesses: " << flagged << " of 40");
    for (int t = 0; t < 20; ++t) {
        const auto p = static_cast<std::size_t>(t % 2);
        const Pair pr = conjugate(oracle::canonical_nilpotent(p), oracle::canonical_gram(p), oracle::invertible(rng, p + 3));
        CHECK(nilpotent_witness_basis(pr.b, BilinearForm(pr.g)).flags.empty());
    }
}

TEST_CASE("witness basis in the mostly-minus convention") {
    const Matrix g = Rational(-1) * oracle::canonical_gram(1);
    const CanonicalForm cf = nilpotent_witness_basis(oracle::canonical_nilpotent(1), BilinearForm(g));
    CHECK(oracle::mul(oracle::canonical_nilpotent(1), cf.witness) == oracle::mul(cf.witness, cf.canonical_matrix));
    CHECK(oracle::mul(oracle::mul(oracle::transpose(cf.witness), g), cf.witness) == cf.canonical_gram);
}

TEST_CASE("witness basis rejects non-nilpotent and zero operators") {
    const BilinearForm mink(Matrix::diagonal(Vector{-1, 1, 1}));
    CHECK_THROWS_AS(nilpotent_witness_basis(Matrix(3, 3), mink), StructuralError);
    CHECK_THROWS_AS(nilpotent_witness_basis(Matrix{{0, 2, 0}, {2, 0, 0}, {0, 0, 0}}, mink), StructuralError);
}
