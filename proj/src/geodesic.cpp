#include "gonil/geodesic.hpp"

#include <random>

namespace gonil {

std::optional<Rational> geodesic_vector_k(const ReductiveSpace& r, std::span<const Rational> xi) {
    if (xi.size() != r.dim()) throw InputError("geodesic_vector_k: vector length mismatch");
    if (is_zero(xi)) throw InputError("geodesic_vector_k: xi must be nonzero");
    const std::size_t mk = r.m_dim();
    const Vector xm = r.projection().to_m * xi;
    Matrix a(mk, 1);
    Vector b(mk);
    for (std::size_t j = 0; j < mk; ++j) {
        const Vector& zeta = r.m_span()[j];
        b[j] = r.inner(r.bracket_m(xi, zeta), xm);
        a(j, 0) = r.inner(xm, zeta);
    }
    auto sol = solve_linear(a, b);
    if (!sol) return std::nullopt;
    return sol->particular[0];
}

Vector geodesic_residuals(const ReductiveSpace& r, std::span<const Rational> xi, std::span<const Rational> alpha,
                          const Rational& k) {
    const Vector moved = add(xi, alpha);
    Vector out(r.m_dim());
    for (std::size_t j = 0; j < r.m_dim(); ++j) {
        const Vector& zeta = r.m_span()[j];
        out[j] = r.inner(r.bracket_m(moved, zeta), xi) - k * r.inner(zeta, xi);
    }
    return out;
}

AlphaResult solve_alpha(const ReductiveSpace& r, std::span<const Rational> xi) {
    if (xi.size() != r.dim()) throw InputError("solve_alpha: vector length mismatch");
    if (!r.in_m(xi)) throw InputError("solve_alpha: xi must lie in m");
    const std::size_t mk = r.m_dim(), hk = r.h_dim();
    // Unknowns (α_0..α_{hk-1}, k).
    Matrix a(mk, hk + 1);
    Vector b(mk);
    for (std::size_t j = 0; j < mk; ++j) {
        const Vector& zeta = r.m_span()[j];
        for (std::size_t c = 0; c < hk; ++c) a(j, c) = r.inner(r.bracket_m(r.h_span()[c], zeta), xi);
        a(j, hk) = -r.inner(zeta, xi);
        b[j] = -r.inner(r.bracket_m(xi, zeta), xi);
    }
    auto sol = solve_linear(a, b);
    if (!sol) return Infeasible{Vector(xi.begin(), xi.end())};

    GeodesicSolution g;
    g.alpha_coords.assign(sol->particular.begin(), sol->particular.begin() + static_cast<std::ptrdiff_t>(hk));
    g.k = sol->particular[hk];
    g.alpha = r.from_h_coordinates(g.alpha_coords);
    g.freedom = std::move(sol->kernel);
    g.residuals = geodesic_residuals(r, xi, g.alpha, g.k);
    return g;
}

const char* to_string(GoStatus s) {
    switch (s) {
        case GoStatus::ProvenNatred: return "PROVEN_NATRED";
        case GoStatus::SampledPass: return "SAMPLED_PASS";
        case GoStatus::Counterexample: return "COUNTEREXAMPLE";
    }
    return "?";
}

Vector sample_direction(std::size_t m_dim, std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(index), hi(index)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    Vector v(m_dim);
    for (auto& x : v) {
        const int p = num(rng);
        x = Rational(p, den(rng));
    }
    return v;
}

namespace {

// Visits every vector of {−d..d}^n except zero, in lexicographic order;
// stops when `f` returns false.
template <class F>
bool for_each_grid_point(std::size_t n, int d, F&& f) {
    std::vector<int> idx(n, -d);
    while (true) {
        bool zero = true;
        for (int v : idx) zero = zero && v == 0;
        if (!zero) {
            Vector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = idx[i];
            if (!f(v)) return false;
        }
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (idx[pos] < d) {
                ++idx[pos];
                break;
            }
            idx[pos] = -d;
            if (pos == 0) return true;
        }
        if (n == 0) return true;
    }
}

}  // namespace

GoVerdict go_certify(const ReductiveSpace& r, const GoParams& params) {
    GoVerdict verdict;
    verdict.n_samples = params.n_samples;
    verdict.seed = params.seed;

    if (is_naturally_reductive(r).holds) {
        verdict.status = GoStatus::ProvenNatred;
        verdict.notes = "naturally reductive: every direction is geodesic with alpha = 0, k = 0";
        return verdict;
    }

    const std::size_t mk = r.m_dim();
    auto check = [&](std::span<const Rational> coords) {
        if (is_zero(coords)) return true;
        const Vector xi = r.from_m_coordinates(coords);
        ++verdict.directions_checked;
        if (std::holds_alternative<Infeasible>(solve_alpha(r, xi))) {
            verdict.status = GoStatus::Counterexample;
            verdict.counterexample = xi;
            return false;
        }
        return true;
    };

    for (std::size_t i = 0; i < mk; ++i)
        if (!check(unit_vector(mk, i))) return verdict;
    for (std::size_t i = 0; i < mk; ++i)
        for (std::size_t j = i + 1; j < mk; ++j)
            if (!check(add(unit_vector(mk, i), unit_vector(mk, j)))) return verdict;
    for (std::size_t s = 0; s < params.n_samples; ++s)
        if (!check(sample_direction(mk, params.seed, params.stream, s))) return verdict;
    if (params.grid_depth && *params.grid_depth > 0)
        if (!for_each_grid_point(mk, *params.grid_depth, check)) return verdict;

    verdict.status = GoStatus::SampledPass;
    verdict.notes = "sampled evidence only, not a proof: every checked direction admits (alpha, k)";
    return verdict;
}

AffineParameter affine_parameter(const Rational& k, const std::optional<Rational>& t) {
    if (k.is_zero()) {
        if (t) return {*t, t->str()};
        return {std::nullopt, "t"};
    }
    const Rational c = -k;
    if (t) {
        const Rational e = c * *t;
        if (e.is_zero()) return {Rational(1), "1"};
        return {std::nullopt, "exp(" + e.str() + ")"};
    }
    std::string coef;
    if (c == Rational(1))
        coef = "";
    else if (c == Rational(-1))
        coef = "-";
    else if (c.is_integer())
        coef = c.str();
    else
        coef = "(" + c.str() + ")";
    return {std::nullopt, "exp(" + coef + "t)"};
}

}  // namespace gonil
