#include "gonil/lie.hpp"

#include "gonil/errors.hpp"

namespace gonil {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)) {
    if (!names_.empty() && names_.size() != dim_)
        throw InputError("basis_names has " + std::to_string(names_.size()) + " entries for dimension " +
                         std::to_string(dim_));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim); }

std::string LieAlgebra::name(std::size_t i) const {
    if (i < names_.size()) return names_[i];
    return "e" + std::to_string(i);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVector& value) {
    if (i >= dim_ || j >= dim_)
        throw InputError("bracket index (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") out of range for dimension " + std::to_string(dim_));
    if (i == j) {
        for (const auto& [k, c] : value)
            if (!c.is_zero()) throw InputError("[e_i, e_i] must vanish (i = " + std::to_string(i) + ")");
        return;
    }
    SparseVector v;
    const bool flip = i > j;
    for (const auto& [k, c] : value) {
        if (k >= dim_)
            throw InputError("bracket coefficient index " + std::to_string(k) + " out of range for dimension " +
                             std::to_string(dim_));
        if (!c.is_zero()) v[k] = flip ? -c : c;
    }
    const auto key = flip ? std::pair{j, i} : std::pair{i, j};
    if (v.empty())
        brackets_.erase(key);
    else
        brackets_[key] = std::move(v);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::span<const Rational> value) {
    if (value.size() != dim_) throw InputError("bracket value has wrong length");
    SparseVector v;
    for (std::size_t k = 0; k < value.size(); ++k)
        if (!value[k].is_zero()) v[k] = value[k];
    set_bracket(i, j, v);
}

Vector LieAlgebra::structure(std::size_t i, std::size_t j) const {
    Vector out(dim_);
    if (i == j) return out;
    const bool flip = i > j;
    const auto it = brackets_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == brackets_.end()) return out;
    for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
    return out;
}

Vector LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
    if (u.size() != dim_ || v.size() != dim_) throw InputError("bracket: vector length mismatch");
    Vector out(dim_);
    for (const auto& [key, coeffs] : brackets_) {
        const auto [i, j] = key;
        // u_i v_j [e_i,e_j] + u_j v_i [e_j,e_i]
        const Rational w = u[i] * v[j] - u[j] * v[i];
        if (w.is_zero()) continue;
        for (const auto& [k, c] : coeffs) out[k] += w * c;
    }
    return out;
}

Matrix LieAlgebra::ad(std::span<const Rational> x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vector col = bracket(x, unit_vector(dim_, j));
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
}

JacobiResult validate(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
                Vector r = g.bracket(ei, g.structure(j, k));
                r = add(r, g.bracket(ej, g.structure(k, i)));
                r = add(r, g.bracket(ek, g.structure(i, j)));
                if (!is_zero(r)) return JacobiFailure{i, j, k, std::move(r)};
            }
    return JacobiOk{};
}

SeriesReport lower_central_series(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    SeriesReport rep;
    Basis current;
    for (std::size_t i = 0; i < n; ++i) current.push_back(unit_vector(n, i));
    rep.chain.push_back(current);
    rep.dims.push_back(n);
    while (!current.empty()) {
        Basis images;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& c : current) {
                Vector b = g.bracket(unit_vector(n, i), c);
                if (!is_zero(b)) images.push_back(std::move(b));
            }
        Basis next = echelon_basis(images, n);
        if (next.size() == current.size()) {
            // Stable nonzero term: not nilpotent.
            rep.nilpotent = false;
            return rep;
        }
        current = std::move(next);
        rep.chain.push_back(current);
        rep.dims.push_back(current.size());
    }
    rep.nilpotent = true;
    rep.step = rep.dims.size() - 1;
    return rep;
}

Basis derived_subalgebra(const LieAlgebra& g) {
    Basis span;
    for (const auto& [key, coeffs] : g.brackets()) span.push_back(g.structure(key.first, key.second));
    return echelon_basis(span, g.dim());
}

InvarianceError::InvarianceError(std::size_t basis_index, Vector image)
    : InputError("subspace not ad(x)-invariant: [x, s_" + std::to_string(basis_index) + "] leaves the subspace"),
      index_(basis_index),
      image_(std::move(image)) {}

Matrix ad_restricted(const LieAlgebra& g, std::span<const Rational> x, const Basis& subspace) {
    const std::size_t n = g.dim();
    Matrix m(subspace.size(), subspace.size());
    for (std::size_t j = 0; j < subspace.size(); ++j) {
        Vector img = g.bracket(x, subspace[j]);
        auto co = coordinates(subspace, img, n);
        if (!co) throw InvarianceError(j, std::move(img));
        for (std::size_t i = 0; i < subspace.size(); ++i) m(i, j) = (*co)[i];
    }
    return m;
}

LieAlgebra subalgebra(const LieAlgebra& g, const Basis& basis) {
    LieAlgebra s(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Vector b = g.bracket(basis[i], basis[j]);
            auto co = coordinates(basis, b, g.dim());
            if (!co) throw InputError("subalgebra: span not closed under the bracket at pair (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
            s.set_bracket(i, j, *co);
        }
    return s;
}

}  // namespace gonil
