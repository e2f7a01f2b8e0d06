#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gonil/errors.hpp"
#include "gonil/linalg.hpp"
#include "gonil/matrix.hpp"

namespace gonil {

/// Sparse coefficient list: basis index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

/// Lie algebra given by structure constants [e_i, e_j] = Σ_k c_ij^k e_k.
/// Only pairs i < j are stored; zero brackets are omitted. Indices are 0-based.
class LieAlgebra {
   public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> basis_names = {});

    static LieAlgebra abelian(std::size_t dim);

    /// Sets [e_i, e_j]. For i > j the negated value is stored under (j, i).
    void set_bracket(std::size_t i, std::size_t j, const SparseVector& value);
    void set_bracket(std::size_t i, std::size_t j, std::span<const Rational> value);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<std::string>& basis_names() const noexcept { return names_; }
    [[nodiscard]] std::string name(std::size_t i) const;
    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& brackets() const noexcept {
        return brackets_;
    }

    /// Dense [e_i, e_j] for any ordered pair.
    [[nodiscard]] Vector structure(std::size_t i, std::size_t j) const;
    /// Bilinear antisymmetric extension of the structure constants.
    [[nodiscard]] Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;
    /// Matrix of ad(x) on the whole algebra (column j = [x, e_j]).
    [[nodiscard]] Matrix ad(std::span<const Rational> x) const;
    [[nodiscard]] bool is_abelian() const noexcept { return brackets_.empty(); }

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

   private:
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> brackets_;
};

struct JacobiOk {};
struct JacobiFailure {
    std::size_t i, j, k;
    Vector residual;
};
using JacobiResult = std::variant<JacobiOk, JacobiFailure>;

/// Checks Σ_cyc [e_i,[e_j,e_k]] = 0 over i<j<k; returns the first failing
/// triple in lexicographic order.
JacobiResult validate(const LieAlgebra& g);

/// Lower central series C^1 = g, C^{m+1} = [g, C^m].
///
/// `step` follows the convention abelian = 1: a nonzero algebra is s-step
/// nilpotent when C^s != 0 and C^{s+1} = 0. The zero algebra has step 0.
struct SeriesReport {
    std::vector<Basis> chain;
    std::vector<std::size_t> dims;
    bool nilpotent = false;
    std::optional<std::size_t> step;
};

SeriesReport lower_central_series(const LieAlgebra& g);
/// Echelon basis of span{[e_i, e_j]}.
Basis derived_subalgebra(const LieAlgebra& g);

/// x leaves S invariant only partially: [x, s] for the named basis vector of S escapes S.
class InvarianceError : public InputError {
   public:
    InvarianceError(std::size_t basis_index, Vector image);
    [[nodiscard]] std::size_t basis_index() const noexcept { return index_; }
    [[nodiscard]] const Vector& image() const noexcept { return image_; }

   private:
    std::size_t index_;
    Vector image_;
};

/// Matrix of ad(x)|_S in the given (linearly independent) basis of S.
/// Column j holds the S-coordinates of [x, s_j].
Matrix ad_restricted(const LieAlgebra& g, std::span<const Rational> x, const Basis& subspace);

/// Lie algebra on the span of `basis` (which must be closed under the bracket),
/// expressed in the coordinates of that basis.
LieAlgebra subalgebra(const LieAlgebra& g, const Basis& basis);

}  // namespace gonil
