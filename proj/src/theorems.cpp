#include "gonil/theorems.hpp"

#include <sstream>

namespace gonil {

ImageChain adjoint_image_chain(const std::vector<Matrix>& maps, std::size_t dim) {
    for (const auto& m : maps)
        if (m.rows() != dim || m.cols() != dim) throw InputError("adjoint_image_chain: map of the wrong size");
    ImageChain out;
    Basis current;
    for (std::size_t i = 0; i < dim; ++i) current.push_back(unit_vector(dim, i));
    out.dims.push_back(dim);
    out.stages.push_back(current);
    while (!current.empty()) {
        Basis images;
        for (const auto& m : maps)
            for (const auto& v : current) images.push_back(m * v);
        Basis next = echelon_basis(images, dim);
        if (next.size() == current.size()) break;
        current = std::move(next);
        out.dims.push_back(current.size());
        out.stages.push_back(current);
    }
    return out;
}

Matrix constrained_adjoint(const Rational& a12, std::span<const Rational> b1, std::span<const Rational> b2) {
    if (b1.size() != b2.size()) throw InputError("constrained_adjoint: b-vectors differ in length");
    const std::size_t p = b1.size();
    Matrix m(p + 3, p + 3);
    m(0, 1) = a12;
    m(1, 2) = a12;
    for (std::size_t i = 0; i < p; ++i) {
        m(0, 3 + i) = b1[i];
        m(1, 3 + i) = b2[i];
        m(3 + i, 1) = -b2[i];
        m(3 + i, 2) = b1[i];
    }
    return m;
}

Rational trace_of_square(const Matrix& m) {
    if (!m.is_square()) throw InputError("trace_of_square: matrix is not square");
    Rational t;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) t += m(i, k) * m(k, i);
    return t;
}

const char* to_string(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::Pass: return "PASS";
        case TheoremVerdict::Fail: return "FAIL";
        case TheoremVerdict::HypothesisFailed: return "HYPOTHESIS_FAILED";
    }
    return "?";
}

const char* to_string(Thm41Branch b) { return b == Thm41Branch::AdTrivial ? "AdTrivial" : "Structured"; }

namespace {

std::string vec_str(std::span<const Rational> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

struct NilData {
    LieAlgebra n;  // in m_span coordinates
    BilinearForm metric;
    SeriesReport series;
    Basis derived;
    BilinearForm derived_form;
};

NilData nil_data(const ReductiveSpace& r) {
    NilData d;
    try {
        d.n = subalgebra(r.algebra(), r.m_span());
    } catch (const InputError&) {
        throw HypothesisError("m is not closed under the bracket; the verifiers read m as the nilpotent ideal n");
    }
    d.metric = r.metric();
    d.series = lower_central_series(d.n);
    if (!d.series.nilpotent) throw HypothesisError("m is not a nilpotent Lie algebra");
    d.derived = derived_subalgebra(d.n);
    d.derived_form = restrict(d.metric, d.derived);
    return d;
}

// Expected (firstapprox)-shaped matrix for parameters (a, b) over a canonical
// Gram with <e2,e2> = q and diagonal complement entries d_l.
Matrix first_approximation(std::size_t p, const Rational& a, std::span<const Rational> b, const Matrix& gram) {
    Matrix m(p + 3, p + 3);
    m(0, 1) = a;
    m(1, 2) = a;
    const Rational q = gram(1, 1);
    for (std::size_t l = 0; l < p; ++l) {
        m(0, 3 + l) = b[l];
        m(3 + l, 2) = q * b[l] / gram(3 + l, 3 + l);
    }
    return m;
}

Vector row_b(const Matrix& m, std::size_t p) {
    Vector b(p);
    for (std::size_t l = 0; l < p; ++l) b[l] = m(0, 3 + l);
    return b;
}

bool invariant_under(const Matrix& op, const Basis& s, std::size_t dim) {
    for (const auto& v : s)
        if (!span_contains(s, op * v, dim)) return false;
    return true;
}

void check_step(std::vector<Violation>& out, const SeriesReport& series, const char* name, bool allow4,
                std::size_t max_plain) {
    const std::size_t c = series.step.value_or(0);
    if (c <= max_plain || (allow4 && c == 4)) return;
    out.push_back({name, "nilpotency class " + std::to_string(c) + (allow4 ? " is not in {1, 2, 4}" : " exceeds 2")});
}

}  // namespace

Thm41Report verify_thm41(const ReductiveSpace& r) {
    const NilData d = nil_data(r);
    if (!is_nondegenerate(d.derived_form))
        throw HypothesisError("metric is degenerate on [n,n]; use verify-thm42");

    const std::size_t n = d.n.dim();
    Thm41Report rep;
    rep.nilpotency_class = d.series.step;
    rep.derived = d.derived;
    if (!is_lorentz(d.metric)) {
        rep.hypothesis_ok = false;
        rep.hypothesis_notes.emplace_back("metric on n is not Lorentz");
    }
    rep.complement = d.derived.empty() ? orthocomplement(d.metric, {}) : orthocomplement(d.metric, d.derived);

    // Skew invariance of ad(v) on [n,n].
    for (std::size_t a = 0; a < rep.complement.size(); ++a)
        for (std::size_t i = 0; i < d.derived.size(); ++i)
            for (std::size_t j = i; j < d.derived.size(); ++j) {
                const Vector& xi = rep.complement[a];
                const Rational s = d.metric(d.n.bracket(xi, d.derived[i]), d.derived[j]) +
                                   d.metric(d.derived[i], d.n.bracket(xi, d.derived[j]));
                if (!s.is_zero())
                    rep.violations.push_back({"skew_invariance", "<[v_" + std::to_string(a) + ", d_" +
                                                                     std::to_string(i) + "], d_" + std::to_string(j) +
                                                                     "> + <d_" + std::to_string(i) + ", [v_" +
                                                                     std::to_string(a) + ", d_" + std::to_string(j) +
                                                                     "]> = " + s.str()});
            }

    std::optional<std::size_t> pick;
    for (std::size_t a = 0; a < rep.complement.size() && !pick; ++a)
        if (!d.derived.empty() && !ad_restricted(d.n, rep.complement[a], d.derived).is_zero()) pick = a;

    if (!pick) {
        rep.branch = Thm41Branch::AdTrivial;
        check_step(rep.violations, d.series, "ad_trivial_step", false, 2);
    } else {
        rep.branch = Thm41Branch::Structured;
        rep.x = rep.complement[*pick];
        const Matrix bx = ad_restricted(d.n, *rep.x, d.derived);
        std::optional<CanonicalForm> cf;
        try {
            cf = nilpotent_witness_basis(bx, d.derived_form);
        } catch (const std::exception& e) {
            rep.violations.push_back({"adjoint_canonical_form", e.what()});
        }
        if (cf) {
            for (const auto& f : cf->flags) rep.flags.push_back(f);
            const std::size_t k = d.derived.size(), p = k - 3;
            Basis e;
            for (std::size_t c = 0; c < k; ++c) e.push_back(combine(cf->witness.column(c), d.derived, n));
            rep.derived_witness = Matrix::from_columns(e, n);
            const Matrix& gram = cf->canonical_gram;
            const Matrix jx = ad_restricted(d.n, *rep.x, e);
            rep.ad_forms.push_back(jx);

            Basis others;
            for (std::size_t a = 0; a < rep.complement.size(); ++a)
                if (a != *pick) others.push_back(rep.complement[a]);
            const std::size_t s = others.size();

            // First approximation, then x̃_i = x_i − a(x_i) x.
            Basis tilde;
            for (std::size_t i = 0; i < s; ++i) {
                const Matrix mi = ad_restricted(d.n, others[i], e);
                const Rational a = mi(0, 1);
                if (!(mi == first_approximation(p, a, row_b(mi, p), gram)))
                    rep.violations.push_back({"first_approximation_form",
                                              "ad(x_" + std::to_string(i + 1) + ")|[n,n] is not of the form"});
                Vector t = others[i];
                axpy(t, -a, *rep.x);
                const Matrix mt = ad_restricted(d.n, t, e);
                if (!(mt == first_approximation(p, Rational(0), row_b(mt, p), gram)))
                    rep.violations.push_back({"gauss_elimination_form",
                                              "ad(x~_" + std::to_string(i + 1) + ")|[n,n] keeps an a-entry"});
                tilde.push_back(std::move(t));
            }

            if (s == 0) rep.flags.emplace_back("s=0: v is spanned by x alone");
            if (s == 1) rep.flags.emplace_back("s=1: only the adjoint and elimination forms are checked");

            if (s >= 2) {
                // e3-components of [x, x̃_i], in the canonical coordinates of [n,n].
                auto e3_component = [&](const Vector& t) {
                    const auto co = coordinates(e, d.n.bracket(*rep.x, t), n);
                    return co ? (*co)[2] : Rational(0);
                };
                std::optional<std::size_t> lead;
                for (std::size_t i = 0; i < s && !lead; ++i)
                    if (!e3_component(tilde[i]).is_zero()) lead = i;
                if (!lead) {
                    rep.violations.push_back({"structure_form", "no [x, x~_i] has an e3 component"});
                } else {
                    std::swap(tilde[0], tilde[*lead]);
                    const Rational c1 = e3_component(tilde[0]);
                    for (std::size_t i = 1; i < s; ++i) {
                        const Rational ci = e3_component(tilde[i]);
                        if (!ci.is_zero()) axpy(tilde[i], -(ci / c1), tilde[0]);
                    }
                    const Matrix m1 = ad_restricted(d.n, tilde[0], e);
                    rep.a_vector = row_b(m1, p);
                    if (!(m1 == first_approximation(p, Rational(0), rep.a_vector, gram)))
                        rep.violations.push_back({"structure_form", "ad(x~_1)|[n,n] is not of the form"});
                    for (std::size_t i = 1; i < s; ++i)
                        if (!ad_restricted(d.n, tilde[i], e).is_zero())
                            rep.violations.push_back(
                                {"structure_form", "ad(x~_" + std::to_string(i + 1) + ")|[n,n] != 0"});
                }
            } else if (s == 1) {
                rep.a_vector = row_b(ad_restricted(d.n, tilde[0], e), p);
            }
            rep.x_tilde = tilde;

            std::vector<Matrix> maps{jx};
            for (const auto& t : tilde) {
                rep.ad_forms.push_back(ad_restricted(d.n, t, e));
                maps.push_back(rep.ad_forms.back());
            }
            const ImageChain chain = adjoint_image_chain(maps, k);
            rep.chain_dims = chain.dims;
            const bool ends = chain.dims.size() >= 2 && chain.dims.back() == 0 &&
                              chain.dims[chain.dims.size() - 2] == 1 &&
                              chain.stages[chain.stages.size() - 2] == Basis{unit_vector(k, 0)};
            if (!ends)
                rep.violations.push_back({"span_chain", "iterated images do not end with span{e1} then 0"});
        }
    }

    // ad([y, z])|[n,n] = 0.
    if (!d.derived.empty())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Vector yz = d.n.structure(i, j);
                if (is_zero(yz)) continue;
                if (!ad_restricted(d.n, yz, d.derived).is_zero())
                    rep.violations.push_back({"derived_adjoint_vanishing", "ad([n_" + std::to_string(i) + ", n_" +
                                                                               std::to_string(j) + "])|[n,n] != 0"});
            }

    check_step(rep.violations, d.series, "step_exclusion", true, 2);
    return rep;
}

Thm42Report verify_thm42(const ReductiveSpace& r) {
    const NilData d = nil_data(r);
    if (is_nondegenerate(d.derived_form))
        throw HypothesisError("metric is nondegenerate on [n,n]; use verify-thm41");

    const std::size_t n = d.n.dim();
    Thm42Report rep;
    rep.nilpotency_class = d.series.step;
    rep.derived = d.derived;
    rep.notes.emplace_back(
        "complete reducibility of the isotropy action is not decided; the invariant splitting it yields is checked "
        "instead");
    if (!is_lorentz(d.metric)) {
        rep.hypothesis_ok = false;
        rep.hypothesis_notes.emplace_back("metric on n is not Lorentz");
    }

    const Basis rad = radical(d.derived_form);
    if (rad.size() != 1) {
        rep.violations.push_back(
            {"radical_dimension", "[n,n] ∩ [n,n]⊥ has dimension " + std::to_string(rad.size()) + ", expected 1"});
        check_step(rep.violations, d.series, "step_bound", false, 2);
        return rep;
    }
    rep.radical = combine(rad[0], d.derived, n);
    const Vector& e = rep.radical;

    std::vector<Matrix> iso;
    for (const auto& eta : r.h_span()) iso.push_back(ad_on_m(r, eta));

    // Null partner: <e, u> = 1 and, when possible, (ad(η) + c_η) u = 0 where ad(η) e = c_η e.
    const Vector ge = d.metric.gram() * e;
    std::vector<Vector> rows{ge};
    Vector rhs{Rational(1)};
    bool eigen_ok = true;
    for (const auto& m : iso) {
        const Vector img = m * e;
        const auto c = coordinates(Basis{e}, img, n);
        if (!c) {
            eigen_ok = false;
            rep.violations.push_back({"isotropy_invariance", "isotropy does not preserve the line of e_{p+1}"});
            break;
        }
        Matrix shifted = m + (*c)[0] * Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(shifted.row(i));
            rhs.emplace_back(0);
        }
    }
    std::optional<LinearSolution> sol;
    if (eigen_ok) sol = solve_linear(Matrix::from_rows(rows, n), rhs);
    const bool constrained = sol.has_value() && !iso.empty();
    if (!sol) {
        if (!iso.empty()) rep.notes.emplace_back("no isotropy-eigenvector partner of e_{p+1}; using <e,u> = 1 only");
        sol = solve_linear(Matrix::from_rows({ge}, n), Vector{Rational(1)});
    }
    Vector v0 = sol->particular;
    if (const Rational uu = d.metric(v0, v0); !uu.is_zero()) {
        axpy(v0, -(uu / Rational(2)), e);
        if (constrained) rep.notes.emplace_back("partner corrected to a null vector along e_{p+1}");
    }
    rep.v0 = v0;

    const Basis w{e, v0};
    const Basis vperp = orthocomplement(d.metric, w);
    rep.v1 = span_intersection(vperp, d.derived, n);
    rep.v2 = rep.v1.empty() ? vperp : span_intersection(vperp, orthocomplement(d.metric, rep.v1), n);

    // (1) definite summands of matching sign.
    auto definite_sign = [&](const Basis& b) -> int {
        if (b.empty()) return 0;
        const SignatureReport s = signature(restrict(d.metric, b));
        if (s.null == 0 && s.negative == 0) return 1;
        if (s.null == 0 && s.positive == 0) return -1;
        return 2;
    };
    const int s1 = definite_sign(rep.v1), s2 = definite_sign(rep.v2);
    if (s1 == 2 || s2 == 2 || (s1 != 0 && s2 != 0 && s1 != s2))
        rep.violations.push_back({"definite_summands", "v1 and v2 are not definite of the same sign"});

    // (2) null lines.
    const Basis a = [&] {
        Basis b{v0};
        b.insert(b.end(), rep.v2.begin(), rep.v2.end());
        return b;
    }();
    const Basis arad = radical(restrict(d.metric, a));
    Basis arad_vecs;
    for (const auto& c : arad) arad_vecs.push_back(combine(c, a, n));
    if (echelon_basis(arad_vecs, n) != echelon_basis({v0}, n))
        rep.violations.push_back({"null_lines", "a ∩ a⊥ is not the line of v0"});

    // (3) signature of w.
    rep.signature_w = signature(restrict(d.metric, w));
    if (!(rep.signature_w == SignatureReport{1, 1, 0}))
        rep.violations.push_back({"hyperbolic_plane", "w does not have signature (1,1)"});
    if (d.metric(e, v0) != Rational(1)) rep.violations.push_back({"hyperbolic_plane", "<e_{p+1}, v0> != 1"});

    // (4) orthogonal direct sum.
    Basis all = rep.v1;
    all.insert(all.end(), w.begin(), w.end());
    all.insert(all.end(), rep.v2.begin(), rep.v2.end());
    bool orth = all.size() == n && linearly_independent(all, n);
    for (const auto& x : rep.v1)
        for (const auto& y : w) orth = orth && d.metric(x, y).is_zero();
    for (const auto& x : rep.v2) {
        for (const auto& y : w) orth = orth && d.metric(x, y).is_zero();
        for (const auto& y : rep.v1) orth = orth && d.metric(x, y).is_zero();
    }
    if (!orth) rep.violations.push_back({"orthogonal_splitting", "n != v1 ⊕ w ⊕ v2 orthogonally"});
    for (std::size_t i = 0; i < iso.size(); ++i) {
        const bool inv = invariant_under(iso[i], rep.v1, n) && invariant_under(iso[i], rep.v2, n) &&
                         invariant_under(iso[i], w, n) && invariant_under(iso[i], Basis{e}, n) &&
                         invariant_under(iso[i], Basis{v0}, n);
        if (!inv)
            rep.violations.push_back(
                {"isotropy_invariance", "h_" + std::to_string(i) + " does not preserve the splitting"});
    }

    // (5) ad(a)|[n,n] = 0.
    rep.ad_vanishing = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!ad_restricted(d.n, a[i], d.derived).is_zero()) {
            rep.ad_vanishing = false;
            rep.violations.push_back({"adjoint_vanishing", "ad(a_" + std::to_string(i) + ")|[n,n] != 0 for a_" +
                                                               std::to_string(i) + " = " + vec_str(a[i])});
        }

    check_step(rep.violations, d.series, "step_bound", false, 2);
    return rep;
}

}  // namespace gonil
