#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gonil/matrix.hpp"
#include "gonil/polynomial.hpp"

namespace gonil {

/// Reduced row echelon form. Pivoting is deterministic: columns are scanned
/// left to right and the topmost row with a nonzero entry becomes the pivot row.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    [[nodiscard]] std::size_t rank() const noexcept { return pivot_columns.size(); }
};

Echelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);

struct LinearSolution {
    /// Particular solution with every free variable set to zero.
    Vector particular;
    /// Free-variable basis of the homogeneous kernel.
    Basis kernel;
};

/// Exact solve of A x = b. Absent when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const Rational> b);

/// Basis of { v : A v = 0 }: one vector per free column, that entry 1 and the
/// other free entries 0. Empty iff A is injective.
Basis kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

// Subspaces of Q^dim given by spanning lists.

/// Canonical basis: nonzero rows of the RREF of the stacked vectors. Two
/// subspaces are equal iff their echelon bases are entrywise equal.
Basis echelon_basis(const Basis& span, std::size_t dim);
std::size_t span_dimension(const Basis& span, std::size_t dim);
bool span_contains(const Basis& span, std::span<const Rational> v, std::size_t dim);
bool is_subspace_of(const Basis& inner, const Basis& outer, std::size_t dim);
Basis span_sum(const Basis& a, const Basis& b, std::size_t dim);
Basis span_intersection(const Basis& a, const Basis& b, std::size_t dim);
/// Coordinates of v in a linearly independent list; absent when v is outside the span.
std::optional<Vector> coordinates(const Basis& independent, std::span<const Rational> v, std::size_t dim);
bool linearly_independent(const Basis& vs, std::size_t dim);

/// Monic minimal polynomial: first linear dependence among I, A, A^2, ...
Polynomial minimal_polynomial(const Matrix& a);

struct NilpotencyReport {
    bool nilpotent = false;
    /// Smallest m with A^m = 0, when nilpotent.
    std::optional<std::size_t> index;
};

/// Nilpotent iff A^n = 0 for the n×n input.
NilpotencyReport is_nilpotent_operator(const Matrix& a);

}  // namespace gonil
