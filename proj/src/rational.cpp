#include "gonil/rational.hpp"

#include <cctype>

#include "gonil/errors.hpp"

namespace gonil {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t.find_first_of(".eE") != std::string_view::npos) {
        // Offer the exact fraction for plain decimals such as "0.5".
        const auto dot = t.find('.');
        if (dot != std::string_view::npos && t.find_first_of("eE") == std::string_view::npos) {
            const std::string_view ip = t.substr(0, dot), fp = t.substr(dot + 1);
            const bool digits = !fp.empty() && fp.find_first_not_of("0123456789") == std::string_view::npos;
            const std::string_view mag = !ip.empty() && (ip[0] == '-' || ip[0] == '+') ? ip.substr(1) : ip;
            if (digits && mag.find_first_not_of("0123456789") == std::string_view::npos) {
                mpz_class den = 1;
                for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
                mpz_class whole(mag.empty() ? std::string("0") : std::string(mag), 10);
                mpz_class frac(std::string(fp), 10);
                Rational exact(whole * den + frac, den);
                if (!ip.empty() && ip[0] == '-') exact = -exact;
                throw InputError("floats forbidden; write " + exact.str() + " instead of '" + std::string(text) + "'");
            }
        }
        throw InputError("floats forbidden; write a fraction p/q instead of '" + std::string(text) + "'");
    }
    const auto slash = t.find('/');
    const std::string_view num = t.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : t.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw InputError("malformed rational '" + std::string(text) + "'");
    mpz_class n(strip_plus(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
    return Rational(n, d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

bool Rational::is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 && mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt_exact() const {
    if (!is_square()) throw std::domain_error("not a rational square: " + str());
    return Rational(mpz_class(::sqrt(value_.get_num())), mpz_class(::sqrt(value_.get_den())));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace gonil
