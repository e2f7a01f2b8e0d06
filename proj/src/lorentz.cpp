#include "gonil/lorentz.hpp"

#include <cmath>

#include "gonil/errors.hpp"

namespace gonil {

bool check_skew(const Matrix& b, const BilinearForm& g) {
    if (!b.is_square() || b.rows() != g.dim())
        throw InputError("check_skew: B is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                         " but G has dimension " + std::to_string(g.dim()));
    if (!is_nondegenerate(g)) throw InputError("check_skew: G is degenerate");
    return (b.transpose() * g.gram() + g.gram() * b).is_zero();
}

const char* to_string(CanonicalKind k) {
    switch (k) {
        case CanonicalKind::Zero: return "Zero";
        case CanonicalKind::Semisimple: return "Semisimple";
        case CanonicalKind::NonSemisimple: return "NonSemisimple";
        case CanonicalKind::UndecidedExact: return "UndecidedExact";
    }
    return "?";
}

namespace {

// Returns +1 or −1 so that sign·G has exactly one negative direction.
int lorentz_orientation(const BilinearForm& g) {
    const SignatureReport s = signature(g);
    if (s.null == 0 && s.negative == 1) return 1;
    if (s.null == 0 && s.positive == 1) return -1;
    throw InputError("metric is not Lorentz: signature (" + std::to_string(s.positive) + ", " +
                     std::to_string(s.negative) + ", " + std::to_string(s.null) + ")");
}

// Scales p to a primitive integer polynomial with positive leading coefficient.
Polynomial primitive_integer(const Polynomial& p) {
    mpz_class l = 1, gc = 0;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Rational> out;
    for (const auto& c : p.coefficients()) {
        const Rational v = c * Rational(l, 1);
        mpz_class n = v.numerator();
        mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), n.get_mpz_t());
        out.push_back(v);
    }
    Rational scale = Rational(gc, 1).inverse();
    if (out.back().sign() < 0) scale = -scale;
    for (auto& c : out) c *= scale;
    return Polynomial(std::move(out));
}

struct RootSearch {
    std::optional<Rational> exact;
    double estimate = 0;
};

// The unique root of r in (0, bound]: exact when rational, else a float estimate.
RootSearch unique_positive_root(const Polynomial& r) {
    const Polynomial z = primitive_integer(r);
    const Rational lead = z.leading();
    Rational lo(0), hi = root_bound(z);
    // Distinct rationals with denominator ≤ lead are at least 1/lead² apart.
    const Rational width = (lead * lead).inverse() / Rational(2);
    auto bisect_until = [&](const Rational& w) {
        while (hi - lo >= w) {
            const Rational mid = (lo + hi) / Rational(2);
            if (count_real_roots(z, lo, mid) > 0)
                hi = mid;
            else
                lo = mid;
        }
    };
    bisect_until(width);
    if (z.evaluate(hi).is_zero()) return {hi, hi.to_double()};
    const Rational cand = simplest_rational_between(lo, hi);
    if (z.evaluate(cand).is_zero()) return {cand, cand.to_double()};
    bisect_until(Rational(1, 1000000000000L));
    return {std::nullopt, ((lo + hi) / Rational(2)).to_double()};
}

}  // namespace

Classification classify(const Matrix& b, const BilinearForm& g) {
    if (!check_skew(b, g)) throw InputError("classify: B is not skew with respect to G");
    lorentz_orientation(g);
    const std::size_t n = b.rows();
    Classification c;
    if (b.is_zero()) {
        c.kind = CanonicalKind::Zero;
        c.minimal_polynomial = Polynomial({Rational(0), Rational(1)});
        return c;
    }
    c.minimal_polynomial = minimal_polynomial(b);
    if (!is_squarefree(c.minimal_polynomial)) {
        c.kind = CanonicalKind::NonSemisimple;
        c.c_block_dim = n >= 3 ? n - 3 : 0;
        return c;
    }
    c.c_block_dim = n >= 2 ? n - 2 : 0;
    // Strip the factor t, then read m0(t) = r(t²).
    const std::size_t k = c.minimal_polynomial.zero_root_multiplicity();
    std::vector<Rational> m0(c.minimal_polynomial.coefficients().begin() + static_cast<std::ptrdiff_t>(k),
                             c.minimal_polynomial.coefficients().end());
    const Polynomial even(m0);
    if (!even.is_even()) throw StructuralError("minimal polynomial of a skew operator is not even or odd");
    std::vector<Rational> rc;
    for (std::size_t i = 0; i < m0.size(); i += 2) rc.push_back(m0[i]);
    const Polynomial r(rc);

    const int positive = r.degree() > 0 ? count_real_roots(r, Rational(0), root_bound(r)) : 0;
    if (positive == 0) {
        c.kind = CanonicalKind::Semisimple;
        c.mu = Rational(0);
        return c;
    }
    if (positive > 1) throw StructuralError("skew operator of a Lorentz form with more than one real eigenvalue pair");
    const RootSearch s = unique_positive_root(r);
    if (s.exact && s.exact->is_square()) {
        c.kind = CanonicalKind::Semisimple;
        c.mu = -s.exact->sqrt_exact();
        return c;
    }
    c.kind = CanonicalKind::UndecidedExact;
    c.mu_estimate = -std::sqrt(s.estimate);
    return c;
}

Matrix canonical_nilpotent_matrix(std::size_t p) {
    Matrix m(p + 3, p + 3);
    m(0, 1) = 1;
    m(1, 2) = 1;
    return m;
}

Matrix canonical_nilpotent_gram(std::size_t p) {
    Matrix g(p + 3, p + 3);
    g(0, 2) = g(2, 0) = -1;
    g(1, 1) = 1;
    for (std::size_t i = 3; i < p + 3; ++i) g(i, i) = 1;
    return g;
}

namespace {

struct Orthonormalized {
    Basis vectors;
    std::vector<Rational> norms;
    bool unit = true;
};

Basis gram_schmidt(const BilinearForm& g, const Basis& in) {
    Basis out;
    for (const auto& v : in) {
        Vector f = v;
        for (const auto& e : out) axpy(f, -(g(v, e) / g(e, e)), e);
        if (!is_zero(f)) out.push_back(std::move(f));
    }
    return out;
}

// Integer coefficient vectors with max |c| = h whose first nonzero entry is positive.
template <class F>
bool for_each_layer(std::size_t k, int h, F&& f) {
    std::vector<int> c(k, -h);
    while (true) {
        int mx = 0;
        std::size_t first = k;
        for (std::size_t i = 0; i < k; ++i) {
            mx = std::max(mx, std::abs(c[i]));
            if (first == k && c[i] != 0) first = i;
        }
        if (mx == h && first < k && c[first] > 0 && !f(c)) return false;
        std::size_t pos = k;
        while (true) {
            if (pos == 0) return true;
            --pos;
            if (c[pos] < h) {
                ++c[pos];
                break;
            }
            c[pos] = -h;
        }
    }
}

// Orthonormal basis of a positive definite subspace when one is found by a
// bounded search for vectors of rational-square norm; otherwise orthogonal.
Orthonormalized orthonormalize(const BilinearForm& g, const Basis& span) {
    Orthonormalized out;
    Basis rest = gram_schmidt(g, span);
    while (!rest.empty()) {
        const std::size_t k = rest.size();
        int bound = 1;
        while (std::pow(2.0 * (bound + 1) + 1.0, static_cast<double>(k)) <= 20000.0 && bound < 12) ++bound;
        std::optional<Vector> found;
        for (int h = 1; h <= bound && !found; ++h)
            for_each_layer(k, h, [&](const std::vector<int>& c) {
                Vector x(span.front().size());
                for (std::size_t i = 0; i < k; ++i)
                    if (c[i] != 0) axpy(x, Rational(c[i]), rest[i]);
                const Rational nx = g(x, x);
                if (!nx.is_square()) return true;
                found = scaled(nx.sqrt_exact().inverse(), x);
                return false;
            });
        if (!found) {
            out.unit = false;
            for (auto& v : rest) {
                out.norms.push_back(g(v, v));
                out.vectors.push_back(std::move(v));
            }
            break;
        }
        out.vectors.push_back(*found);
        out.norms.emplace_back(1);
        Basis next;
        for (const auto& v : rest) {
            Vector w = v;
            axpy(w, -g(v, *found), *found);
            next.push_back(std::move(w));
        }
        rest = gram_schmidt(g, next);
    }
    return out;
}

}  // namespace

CanonicalForm nilpotent_witness_basis(const Matrix& b, const BilinearForm& g_in) {
    if (!check_skew(b, g_in)) throw InputError("nilpotent_witness_basis: B is not skew with respect to G");
    const int orient = lorentz_orientation(g_in);
    const BilinearForm g(orient > 0 ? g_in.gram() : Rational(-1) * g_in.gram());
    const std::size_t n = b.rows();
    const Matrix b2 = b * b;
    if (b.is_zero()) throw StructuralError("nilpotent_witness_basis: B = 0 has no witness triple");
    if (!(b2 * b).is_zero())
        throw StructuralError("nilpotent_witness_basis: B^3 != 0, so B is not a nilpotent element of so(n-1,1)");
    if (b2.is_zero()) throw StructuralError("nilpotent_witness_basis: B^2 = 0 with B != 0 is impossible for a Lorentz form");

    std::size_t vi = 0;
    while (is_zero(b2 * unit_vector(n, vi))) ++vi;
    const Vector v = unit_vector(n, vi);

    CanonicalForm out;
    const Rational q = g(b * v, b * v);
    Rational s(1);
    if (q.sign() > 0 && q.is_square()) {
        s = q.sqrt_exact().inverse();
    } else {
        out.flags.push_back("NONUNIT_SCALE{" + q.str() + "}");
    }
    out.scale = s * s * q;
    const Vector w = scaled(s, v);
    const Vector e1 = b2 * w;
    const Vector e2 = b * w;
    // e3 = w + β e1 with <e3,e3> = 0; <w,e1> = −<e2,e2> ≠ 0.
    const Rational beta = -g(w, w) / (Rational(2) * g(w, e1));
    Vector e3 = w;
    axpy(e3, beta, e1);

    const Basis triple{e1, e2, e3};
    const Orthonormalized comp = orthonormalize(g, orthocomplement(g, triple));
    if (!comp.unit) out.flags.emplace_back("NONUNIT_COMPLEMENT");

    Basis cols = triple;
    cols.insert(cols.end(), comp.vectors.begin(), comp.vectors.end());
    if (cols.size() != n) throw StructuralError("witness complement has the wrong dimension");
    out.witness = Matrix::from_columns(cols, n);

    const std::size_t p = n - 3;
    out.canonical_matrix = canonical_nilpotent_matrix(p);
    Matrix cg = canonical_nilpotent_gram(p);
    cg(0, 2) = cg(2, 0) = -out.scale;
    cg(1, 1) = out.scale;
    for (std::size_t i = 0; i < p; ++i) cg(3 + i, 3 + i) = comp.norms[i];
    out.canonical_gram = orient > 0 ? cg : Rational(-1) * cg;

    const auto pinv = inverse(out.witness);
    if (!pinv) throw StructuralError("witness basis is singular");
    if (!(*pinv * b * out.witness == out.canonical_matrix))
        throw StructuralError("witness check failed: P^-1 B P differs from the canonical matrix");
    if (!(out.witness.transpose() * g_in.gram() * out.witness == out.canonical_gram))
        throw StructuralError("witness check failed: P^T G P differs from the canonical Gram matrix");

    out.kind.kind = CanonicalKind::NonSemisimple;
    out.kind.c_block_dim = p;
    out.kind.minimal_polynomial = minimal_polynomial(b);
    return out;
}

}  // namespace gonil
