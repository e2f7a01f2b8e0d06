#include <doctest.h>

#include "gonil/bilinear.hpp"
#include "gonil/families.hpp"
#include "gonil/lie.hpp"
#include "support.hpp"

using namespace gonil;

namespace {

LieAlgebra heisenberg() {
    LieAlgebra g(3, {"v1", "v2", "z"});
    g.set_bracket(0, 1, SparseVector{{2, Rational(1)}});
    return g;
}

}  // namespace

TEST_CASE("brackets are antisymmetric and stored once") {
    LieAlgebra g = heisenberg();
    CHECK(g.structure(1, 0) == Vector{0, 0, -1});
    CHECK(g.bracket(Vector{1, 2, 0}, Vector{3, 5, 7}) == Vector{0, 0, -1});
    g.set_bracket(1, 0, SparseVector{{2, Rational(2)}});
    CHECK(g.structure(0, 1) == Vector{0, 0, -2});
    CHECK(g.brackets().size() == 1);
    CHECK_THROWS_AS(g.set_bracket(0, 3, SparseVector{}), InputError);
}

TEST_CASE("Jacobi validation names the first failing triple") {
    CHECK(std::holds_alternative<JacobiOk>(validate(heisenberg())));
    LieAlgebra bad(3);
    bad.set_bracket(0, 1, SparseVector{{1, Rational(1)}});
    bad.set_bracket(1, 2, SparseVector{{0, Rational(1)}});
    const JacobiResult r = validate(bad);
    const auto* f = std::get_if<JacobiFailure>(&r);
    REQUIRE(f);
    CHECK((f->i == 0 && f->j == 1 && f->k == 2));
    // Oracle: [e0,[e1,e2]] + [e1,[e2,e0]] + [e2,[e0,e1]] = 0 + 0 + [e2,e1] = -e0.
    CHECK(f->residual == Vector{-1, 0, 0});
}

TEST_CASE("lower central series: abelian is step 1") {
    CHECK(lower_central_series(LieAlgebra::abelian(3)).step == 1u);
    CHECK(lower_central_series(LieAlgebra::abelian(0)).step == 0u);
    const SeriesReport h = lower_central_series(heisenberg());
    CHECK(h.dims == std::vector<std::size_t>{3, 1, 0});
    CHECK(h.step == 2u);
    for (std::size_t n = 3; n <= 7; ++n) CHECK(lower_central_series(filiform(n)).step == n - 1);
    LieAlgebra aff(2);
    aff.set_bracket(0, 1, SparseVector{{1, Rational(1)}});
    const SeriesReport a = lower_central_series(aff);
    CHECK_FALSE(a.nilpotent);
    CHECK_FALSE(a.step.has_value());
}

TEST_CASE("free nilpotent algebras have Witt dimensions") {
    // Witt's formula: rank 2 gives 2, 1, 2, 3 new elements in degrees 1..4; rank 3 gives 3, 3, 8.
    CHECK(free_nilpotent(2, 4).algebra.dim() == 8);
    CHECK(free_nilpotent(3, 3).algebra.dim() == 14);
    const FreeNilpotent f = free_nilpotent(2, 3);
    CHECK(std::holds_alternative<JacobiOk>(validate(f.algebra)));
    CHECK(lower_central_series(f.algebra).dims == std::vector<std::size_t>{5, 3, 2, 0});
}

TEST_CASE("ad_restricted and subalgebra") {
    const LieAlgebra g = heisenberg();
    const Matrix ad = ad_restricted(g, Vector{1, 0, 0}, Basis{{0, 1, 0}, {0, 0, 1}});
    CHECK(ad == Matrix{{0, 0}, {1, 0}});
    CHECK_THROWS_AS(ad_restricted(g, Vector{1, 0, 0}, Basis{{0, 1, 0}}), InvarianceError);
    const LieAlgebra sub = subalgebra(g, Basis{{1, 0, 0}, {0, 0, 1}});
    CHECK(sub.is_abelian());
    CHECK(derived_subalgebra(g) == Basis{{0, 0, 1}});
}

TEST_CASE("signature agrees with the inertia oracle") {
    oracle::Rng rng(3);
    for (int t = 0; t < 60; ++t) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 7));
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = rng.integer(0, 2) ? Rational() : rng.rational();
        const SignatureReport s = signature(BilinearForm(g));
        const oracle::Inertia o = oracle::inertia(g);
        CHECK(s.positive == o.positive);
        CHECK(s.negative == o.negative);
        CHECK(s.null == o.zero);
        CHECK(radical(BilinearForm(g)).size() == o.zero);
    }
    CHECK(signature(BilinearForm(Matrix{{0, 1}, {1, 0}})) == SignatureReport{1, 1, 0});
}

TEST_CASE("Lorentz conventions, definiteness and restriction") {
    const BilinearForm mink(Matrix::diagonal(Vector{1, 1, -1}));
    CHECK(is_lorentz(mink));
    CHECK_FALSE(is_lorentz(mink, SignatureConvention::MostlyMinus));
    CHECK(is_lorentz(BilinearForm(Matrix::diagonal(Vector{-1, -1, 1})), SignatureConvention::MostlyMinus));
    CHECK_FALSE(is_definite(mink));
    CHECK(is_definite(BilinearForm(Matrix::diagonal(Vector{-1, -2}))));
    const BilinearForm r = restrict(mink, Basis{{1, 0, 1}});
    CHECK(r.gram() == Matrix{{0}});
    CHECK_THROWS_AS(BilinearForm(Matrix{{0, 1}, {0, 0}}), InputError);
}

TEST_CASE("orthocomplement is inclusion reversing and pairs to zero") {
    oracle::Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 5;
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = rng.rational(2, 2);
        const BilinearForm f(g);
        Basis s;
        for (int k = 0; k < 2; ++k) {
            Vector v(n);
            for (auto& x : v) x = rng.integer(-2, 2);
            s.push_back(v);
        }
        Basis tt = s;
        Vector w(n);
        for (auto& x : w) x = rng.integer(-2, 2);
        tt.push_back(w);
        const Basis ps = orthocomplement(f, s), pt = orthocomplement(f, tt);
        CHECK(is_subspace_of(pt, ps, n));
        for (const auto& u : ps)
            for (const auto& v : s) CHECK(oracle::quad(g, u, v).is_zero());
    }
    CHECK(orthocomplement(BilinearForm(Matrix::identity(3)), Basis{}).size() == 3);
}
