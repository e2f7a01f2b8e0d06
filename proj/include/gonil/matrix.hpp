#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "gonil/rational.hpp"

namespace gonil {

using Vector = std::vector<Rational>;
/// Spanning list of vectors for a subspace. Interpretation (echelon or witness
/// basis) is documented at each use site.
using Basis = std::vector<Vector>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector sub(std::span<const Rational> a, std::span<const Rational> b);
Vector scaled(const Rational& c, std::span<const Rational> v);
/// a += c * b
void axpy(Vector& a, const Rational& c, std::span<const Rational> b);
/// Σ coeffs[i] * basis[i]; `dim` is used when the basis is empty.
Vector combine(std::span<const Rational> coeffs, const Basis& basis, std::size_t dim);

/// Dense row-major matrix over Q.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix diagonal(std::span<const Rational> d);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] std::span<const Rational> entries() const noexcept { return data_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_symmetric() const;
    [[nodiscard]] Rational trace() const;
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, std::span<const Rational> v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Vector operator*(const Matrix& a, const Vector& v) { return a * std::span<const Rational>(v); }

Matrix power(const Matrix& a, unsigned k);
/// Block-diagonal direct sum of square matrices.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace gonil
