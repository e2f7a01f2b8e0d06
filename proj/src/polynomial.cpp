#include "gonil/polynomial.hpp"

#include <sstream>

#include "gonil/errors.hpp"

namespace gonil {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    const Rational inv = leading().inverse();
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c *= inv;
    return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& a) const {
    if (!a.is_square()) throw InputError("polynomial evaluated at non-square matrix");
    const std::size_t n = a.rows();
    Matrix acc(n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

bool Polynomial::is_even() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

bool Polynomial::is_odd() const {
    for (std::size_t k = 0; k < coeffs_.size(); k += 2)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

std::size_t Polynomial::zero_root_multiplicity() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
    return k;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv = b.leading().inverse();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational c = rem[static_cast<std::size_t>(k + db)] * inv;
        quot[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).degree() == 0;
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Polynomial r = divmod(chain[chain.size() - 2], chain.back()).remainder;
        chain.push_back(Rational(-1) * r);
    }
    chain.pop_back();
    return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = q.evaluate(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() <= 0) return 0;
    // Sturm's theorem counts roots in (lo, hi] for a squarefree polynomial.
    const Polynomial sf = divmod(p, gcd(p, p.derivative())).quotient;
    const auto chain = sturm_chain(sf);
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Rational root_bound(const Polynomial& p) {
    if (p.degree() <= 0) return Rational(1);
    Rational m;
    for (int k = 0; k < p.degree(); ++k) {
        Rational r = (p.coeff(static_cast<std::size_t>(k)) / p.leading()).abs();
        if (r > m) m = r;
    }
    return m + 1;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (lo > hi) return simplest_rational_between(hi, lo);
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_rational_between(-hi, -lo);
    // 0 < lo <= hi: continued-fraction descent.
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
    const Rational f(fl, mpz_class(1));
    if (f == lo) return lo;
    if (f + 1 <= hi) return f + 1;
    // lo and hi share the integer part f; recurse on reciprocals of the fractional parts.
    const Rational inner = simplest_rational_between((hi - f).inverse(), (lo - f).inverse());
    return f + inner.inverse();
}

}  // namespace gonil
