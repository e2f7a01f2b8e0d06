#include "gonil/families.hpp"

#include <algorithm>
#include <map>

namespace gonil {

const char* to_string(Family f) {
    switch (f) {
        case Family::Filiform: return "filiform";
        case Family::Structure1: return "structure1";
        case Family::FreeNilpotentQuotient: return "free";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    if (s == "filiform") return Family::Filiform;
    if (s == "structure1") return Family::Structure1;
    if (s == "free") return Family::FreeNilpotentQuotient;
    return std::nullopt;
}

const char* to_string(HStrategy h) { return h == HStrategy::None ? "none" : "skew-derivations"; }

std::optional<HStrategy> parse_h_strategy(std::string_view s) {
    if (s == "none") return HStrategy::None;
    if (s == "skew-derivations") return HStrategy::SkewDerivations;
    return std::nullopt;
}

namespace {

int mobius(std::size_t n) {
    int m = 1;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    return n > 1 ? -m : m;
}

// Witt dimension of the degree-k part of the free Lie algebra on r generators.
std::size_t witt(std::size_t r, std::size_t k) {
    long long total = 0;
    for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) {
            long long pw = 1;
            for (std::size_t i = 0; i < k / d; ++i) pw *= static_cast<long long>(r);
            total += mobius(d) * pw;
        }
    return static_cast<std::size_t>(total / static_cast<long long>(k));
}

std::size_t free_dim(std::size_t r, std::size_t step) {
    std::size_t n = 0;
    for (std::size_t k = 1; k <= step; ++k) n += witt(r, k);
    return n;
}

}  // namespace

std::size_t param_count(Family f, const Layout& l) {
    switch (f) {
        case Family::Filiform: return l.dim + 1;
        case Family::Structure1: return l.p + 2 + l.s + 1;
        case Family::FreeNilpotentQuotient: return l.step + 1;
    }
    return 0;
}

std::vector<Layout> layouts_for(Family f, std::size_t lo, std::size_t hi) {
    std::vector<Layout> out;
    switch (f) {
        case Family::Filiform:
            for (std::size_t n = std::max<std::size_t>(lo, 3); n <= hi; ++n) out.push_back({.dim = n});
            break;
        case Family::Structure1:
            for (std::size_t n = std::max<std::size_t>(lo, 5); n <= hi; ++n)
                for (std::size_t p = 0; p + 5 <= n; ++p) out.push_back({.dim = n, .p = p, .s = n - p - 4});
            break;
        case Family::FreeNilpotentQuotient:
            for (std::size_t r = 2; r + r * (r - 1) / 2 <= hi; ++r)
                for (std::size_t st = 2; free_dim(r, st) <= hi; ++st) {
                    const std::size_t d = free_dim(r, st);
                    if (d >= lo) out.push_back({.dim = d, .rank = r, .step = st});
                }
            std::stable_sort(out.begin(), out.end(), [](const Layout& a, const Layout& b) { return a.dim < b.dim; });
            break;
    }
    return out;
}

CandidateGrid::CandidateGrid(Family f, std::size_t dim_lo, std::size_t dim_hi, std::vector<Rational> grid,
                             HStrategy h)
    : family_(f), grid_(std::move(grid)), h_(h), layouts_(layouts_for(f, dim_lo, dim_hi)) {
    if (grid_.empty()) throw InputError("parameter grid is empty");
    for (const auto& l : layouts_) {
        offsets_.push_back(total_);
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < param_count(f, l); ++i) {
            if (count > (std::uint64_t{1} << 48) / grid_.size()) throw InputError("parameter grid too large");
            count *= grid_.size();
        }
        total_ += count;
    }
}

CandidateSpec CandidateGrid::at(std::uint64_t index) const {
    if (index >= total_) throw InputError("candidate index out of range");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    const std::size_t li = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    CandidateSpec spec;
    spec.family = family_;
    spec.layout = layouts_[li];
    spec.h_strategy = h_;
    spec.index = index;
    std::uint64_t local = index - offsets_[li];
    const std::size_t k = param_count(family_, spec.layout);
    spec.params.resize(k);
    for (std::size_t i = k; i-- > 0;) {
        spec.params[i] = grid_[local % grid_.size()];
        local /= grid_.size();
    }
    return spec;
}

LieAlgebra filiform(std::size_t n) {
    LieAlgebra g(n);
    for (std::size_t i = 1; i + 1 < n; ++i) g.set_bracket(0, i, SparseVector{{i + 1, Rational(1)}});
    return g;
}

namespace {

using Word = std::vector<std::uint8_t>;
using Tensor = std::map<Word, Rational>;

Tensor commutator(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word ab = wa, ba = wb;
            ab.insert(ab.end(), wb.begin(), wb.end());
            ba.insert(ba.end(), wa.begin(), wa.end());
            out[ab] += ca * cb;
            out[ba] -= ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// Dense coordinates over all words of length k in r letters.
Vector dense(const Tensor& t, std::size_t r, std::size_t k) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i) size *= r;
    Vector v(size);
    for (const auto& [w, c] : t) {
        std::size_t idx = 0;
        for (auto letter : w) idx = idx * r + letter;
        v[idx] = c;
    }
    return v;
}

}  // namespace

FreeNilpotent free_nilpotent(std::size_t rank, std::size_t step) {
    std::vector<Tensor> basis;
    std::vector<std::size_t> degree;
    std::vector<Basis> dense_by_degree(step + 1);
    std::vector<std::vector<std::size_t>> index_by_degree(step + 1);
    for (std::size_t g = 0; g < rank; ++g) {
        basis.push_back(Tensor{{Word{static_cast<std::uint8_t>(g)}, Rational(1)}});
        degree.push_back(1);
        dense_by_degree[1].push_back(dense(basis.back(), rank, 1));
        index_by_degree[1].push_back(g);
    }
    for (std::size_t k = 2; k <= step; ++k) {
        std::size_t words = 1;
        for (std::size_t i = 0; i < k; ++i) words *= rank;
        const std::vector<std::size_t> prev = index_by_degree[k - 1];
        for (std::size_t g = 0; g < rank; ++g)
            for (std::size_t b : prev) {
                Tensor t = commutator(basis[g], basis[b]);
                Vector v = dense(t, rank, k);
                if (is_zero(v) || span_contains(dense_by_degree[k], v, words)) continue;
                index_by_degree[k].push_back(basis.size());
                dense_by_degree[k].push_back(std::move(v));
                basis.push_back(std::move(t));
                degree.push_back(k);
            }
    }
    FreeNilpotent out{LieAlgebra(basis.size()), degree};
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const std::size_t k = degree[i] + degree[j];
            if (k > step) continue;
            std::size_t words = 1;
            for (std::size_t w = 0; w < k; ++w) words *= rank;
            const Vector v = dense(commutator(basis[i], basis[j]), rank, k);
            if (is_zero(v)) continue;
            const auto co = coordinates(dense_by_degree[k], v, words);
            if (!co) throw StructuralError("free nilpotent construction: bracket outside the degree span");
            SparseVector sv;
            for (std::size_t c = 0; c < co->size(); ++c)
                if (!(*co)[c].is_zero()) sv[index_by_degree[k][c]] = (*co)[c];
            out.algebra.set_bracket(i, j, sv);
        }
    return out;
}

std::variant<std::pair<LieAlgebra, BilinearForm>, Rejection> build_nilpotent(const CandidateSpec& spec) {
    const auto& pr = spec.params;
    if (pr.size() != param_count(spec.family, spec.layout))
        return Rejection{"invalid", "expected " + std::to_string(param_count(spec.family, spec.layout)) +
                                        " parameters, got " + std::to_string(pr.size()),
                         std::nullopt};
    LieAlgebra g;
    Matrix gram;
    switch (spec.family) {
        case Family::Filiform: {
            const std::size_t n = spec.layout.dim;
            g = filiform(n);
            gram = Matrix(n, n);
            for (std::size_t i = 0; i < n; ++i) gram(i, i) = pr[i];
            gram(0, n - 1) += pr[n];
            gram(n - 1, 0) += pr[n];
            break;
        }
        case Family::Structure1: {
            // Basis: x, x~_1..x~_s, then e_1..e_{p+3}.
            const std::size_t p = spec.layout.p, s = spec.layout.s, nv = s + 1, n = nv + p + 3;
            if (s == 0) throw InputError("structure1 layout needs s >= 1");
            const auto e = [nv](std::size_t i) { return nv + i - 1; };  // e(1) is e_1
            g = LieAlgebra(n);
            g.set_bracket(0, e(2), SparseVector{{e(1), Rational(1)}});
            g.set_bracket(0, e(3), SparseVector{{e(2), Rational(1)}});
            SparseVector col3;
            for (std::size_t l = 0; l < p; ++l) {
                if (pr[l].is_zero()) continue;
                g.set_bracket(1, e(4 + l), SparseVector{{e(1), pr[l]}});
                col3[e(4 + l)] = pr[l];
            }
            g.set_bracket(1, e(3), col3);
            g.set_bracket(0, 1, SparseVector{{e(3), pr[p]}});
            if (s >= 2) g.set_bracket(1, 2, SparseVector{{e(3), pr[p + 1]}});
            gram = Matrix(n, n);
            for (std::size_t i = 0; i < nv; ++i) gram(i, i) = pr[p + 2 + i];
            gram(e(1), e(3)) = gram(e(3), e(1)) = -1;
            gram(e(2), e(2)) = 1;
            for (std::size_t l = 0; l < p; ++l) gram(e(4 + l), e(4 + l)) = 1;
            break;
        }
        case Family::FreeNilpotentQuotient: {
            FreeNilpotent f = free_nilpotent(spec.layout.rank, spec.layout.step);
            const std::size_t n = f.algebra.dim();
            g = std::move(f.algebra);
            gram = Matrix(n, n);
            for (std::size_t i = 0; i < n; ++i) gram(i, i) = pr[f.degree[i] - 1];
            gram(0, n - 1) += pr[spec.layout.step];
            gram(n - 1, 0) += pr[spec.layout.step];
            break;
        }
    }
    const JacobiResult jr = validate(g);
    if (const auto* fail = std::get_if<JacobiFailure>(&jr)) {
        std::string res;
        for (std::size_t k = 0; k < fail->residual.size(); ++k)
            if (!fail->residual[k].is_zero()) res += (res.empty() ? "" : " + ") + fail->residual[k].str() + "*e" + std::to_string(k);
        return Rejection{"jacobi", "Jacobi fails on (" + std::to_string(fail->i) + ", " + std::to_string(fail->j) + ", " +
                                       std::to_string(fail->k) + "), residual " + res,
                         std::array<std::size_t, 3>{fail->i, fail->j, fail->k}};
    }
    return std::pair{std::move(g), BilinearForm(std::move(gram))};
}

std::vector<Matrix> skew_derivations(const LieAlgebra& n, const BilinearForm& g) {
    const std::size_t d = n.dim();
    if (g.dim() != d) throw InputError("skew_derivations: metric dimension mismatch");
    std::vector<std::vector<Vector>> c(d, std::vector<Vector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) c[i][j] = n.structure(i, j);
    const auto var = [d](std::size_t r, std::size_t col) { return r * d + col; };
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) {
                Vector row(d * d);
                for (std::size_t k = 0; k < d; ++k) row[var(l, k)] += c[i][j][k];
                for (std::size_t a = 0; a < d; ++a) {
                    row[var(a, i)] -= c[a][j][l];
                    row[var(a, j)] -= c[i][a][l];
                }
                if (!is_zero(row)) rows.push_back(std::move(row));
            }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Vector row(d * d);
            for (std::size_t a = 0; a < d; ++a) {
                row[var(a, i)] += g.gram()(a, j);
                row[var(a, j)] += g.gram()(i, a);
            }
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    const Basis ker = kernel_basis(Matrix::from_rows(rows, d * d));
    std::vector<Matrix> out;
    for (const auto& v : ker) {
        Matrix m(d, d);
        for (std::size_t k = 0; k < d * d; ++k) m(k / d, k % d) = v[k];
        out.push_back(std::move(m));
    }
    return out;
}

LieAlgebra semidirect(const LieAlgebra& n, const std::vector<Matrix>& derivations) {
    const std::size_t d = n.dim(), k = derivations.size();
    LieAlgebra g(d + k);
    for (const auto& [key, coeffs] : n.brackets()) g.set_bracket(key.first, key.second, coeffs);
    Basis flat;
    for (const auto& m : derivations) flat.emplace_back(m.entries().begin(), m.entries().end());
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t j = 0; j < d; ++j) {
            SparseVector sv;
            for (std::size_t i = 0; i < d; ++i)
                if (!derivations[a](i, j).is_zero()) sv[i] = derivations[a](i, j);
            g.set_bracket(d + a, j, sv);
        }
        for (std::size_t b = a + 1; b < k; ++b) {
            const Matrix cm = derivations[a] * derivations[b] - derivations[b] * derivations[a];
            const auto co = coordinates(flat, cm.entries(), d * d);
            if (!co) throw InputError("derivation span is not closed under the commutator");
            SparseVector sv;
            for (std::size_t c = 0; c < k; ++c)
                if (!(*co)[c].is_zero()) sv[d + c] = (*co)[c];
            g.set_bracket(d + a, d + b, sv);
        }
    }
    return g;
}

Instantiation instantiate(const CandidateSpec& spec) {
    auto nil = build_nilpotent(spec);
    if (auto* rej = std::get_if<Rejection>(&nil)) return *rej;
    auto& [n, metric] = std::get<0>(nil);
    if (!is_lorentz(metric)) {
        const SignatureReport s = signature(metric);
        return Rejection{"non_lorentz",
                         "signature (" + std::to_string(s.positive) + ", " + std::to_string(s.negative) + ", " +
                             std::to_string(s.null) + ")",
                         std::nullopt};
    }
    const std::size_t d = n.dim();
    std::vector<Matrix> ders;
    if (spec.h_strategy == HStrategy::SkewDerivations) ders = skew_derivations(n, metric);
    LieAlgebra g = ders.empty() ? n : semidirect(n, ders);
    Basis m_span, h_span;
    for (std::size_t i = 0; i < d; ++i) m_span.push_back(unit_vector(d + ders.size(), i));
    for (std::size_t a = 0; a < ders.size(); ++a) h_span.push_back(unit_vector(d + ders.size(), d + a));
    try {
        return Instance{ReductiveSpace::build(std::move(g), std::move(h_span), std::move(m_span), metric),
                        ders.size()};
    } catch (const ValidationError& e) {
        return Rejection{"non_reductive", e.what(), std::nullopt};
    }
}

}  // namespace gonil
