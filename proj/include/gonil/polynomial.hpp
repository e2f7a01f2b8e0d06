#pragma once

#include <string>
#include <vector>

#include "gonil/matrix.hpp"
#include "gonil/rational.hpp"

namespace gonil {

/// Univariate polynomial over Q, coefficients in ascending degree order and
/// never carrying trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);

    static Polynomial monomial(const Rational& c, std::size_t degree);

    [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational{}; }
    [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

    [[nodiscard]] Polynomial derivative() const;
    [[nodiscard]] Polynomial monic() const;
    [[nodiscard]] Rational evaluate(const Rational& x) const;
    [[nodiscard]] Matrix evaluate(const Matrix& a) const;
    /// True iff every odd (or every even) coefficient vanishes, respectively.
    [[nodiscard]] bool is_even() const;
    [[nodiscard]] bool is_odd() const;
    /// Largest k with t^k dividing this polynomial.
    [[nodiscard]] std::size_t zero_root_multiplicity() const;
    /// Human-readable form in the variable `var`, highest degree first.
    [[nodiscard]] std::string str(const std::string& var = "t") const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// gcd(p, p') is constant.
bool is_squarefree(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (lo, hi], by Sturm's theorem.
int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);
/// Cauchy bound: every root has absolute value strictly below the result.
Rational root_bound(const Polynomial& p);
/// Simplest rational (smallest denominator, then smallest magnitude) in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace gonil
