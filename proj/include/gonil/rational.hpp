#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gonil {

/// Exact rational number. Always canonical: lowest terms, positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v) : value_(static_cast<long>(v)) {}  // NOLINT
    Rational(long num, long den);
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p", "-p" or "p/q". Decimal or exponent notation is rejected.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    [[nodiscard]] Rational inverse() const;

    /// Exact square root when both numerator and denominator are perfect squares.
    [[nodiscard]] bool is_square() const;
    [[nodiscard]] Rational sqrt_exact() const;

    /// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

   private:
    mpq_class value_{0};
};

}  // namespace gonil

template <>
struct std::hash<gonil::Rational> {
    std::size_t operator()(const gonil::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
