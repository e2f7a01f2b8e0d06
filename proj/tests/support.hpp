#pragma once

// Test-side oracles. Nothing here calls into the library's linear algebra, so
// the checks built on it are independent of the code under test.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gonil/matrix.hpp"

#ifndef GONIL_FIXTURES_DIR
#define GONIL_FIXTURES_DIR "fixtures"
#endif

namespace oracle {

using gonil::Matrix;
using gonil::Rational;
using gonil::Vector;

inline std::string fixture(const std::string& name) { return std::string(GONIL_FIXTURES_DIR) + "/" + name; }

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
    Rational rational(long num_bound = 3, long den_bound = 3) {
        return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
    }
    Rational nonzero(long num_bound = 3, long den_bound = 3) {
        Rational r;
        while (r.is_zero()) r = rational(num_bound, den_bound);
        return r;
    }
};

inline Matrix mul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Rational quad(const Matrix& g, const Vector& u, const Vector& v) {
    Rational s;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * g(i, j) * v[j];
    return s;
}

/// Characteristic polynomial det(tI - A), ascending coefficients, by Faddeev–LeVerrier.
inline std::vector<Rational> charpoly(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix next = mul(a, m);
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        m = next;
        const Matrix am = mul(a, m);
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

inline Rational det(const Matrix& a) {
    const auto c = charpoly(a);
    return a.rows() % 2 == 0 ? c[0] : -c[0];
}

/// (positive, negative, zero) eigenvalue counts of a symmetric matrix. Its
/// characteristic polynomial is real-rooted, so Descartes' rule of signs is exact.
struct Inertia {
    std::size_t positive = 0, negative = 0, zero = 0;
};

inline Inertia inertia(const Matrix& g) {
    const auto c = charpoly(g);
    Inertia out;
    while (out.zero < c.size() && c[out.zero].is_zero()) ++out.zero;
    const auto changes = [&](bool flip_odd) {
        std::size_t n = 0;
        int last = 0;
        for (std::size_t k = out.zero; k < c.size(); ++k) {
            int s = c[k].sign();
            if (s == 0) continue;
            if (flip_odd && k % 2 == 1) s = -s;
            if (last != 0 && s != last) ++n;
            last = s;
        }
        return n;
    };
    out.positive = changes(false);
    out.negative = changes(true);
    return out;
}

/// Random unimodular integer matrix: a product of elementary shears and swaps.
inline Matrix unimodular(Rng& rng, std::size_t n, int steps = 12) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, i) = 1;
    if (n < 2) {
        if (n == 1 && rng.integer(0, 1)) p(0, 0) = -1;
        return p;
    }
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        Matrix e(n, n);
        for (std::size_t k = 0; k < n; ++k) e(k, k) = 1;
        if (rng.integer(0, 3) == 0) {
            e(i, i) = 0;
            e(j, j) = 0;
            e(i, j) = 1;
            e(j, i) = 1;
        } else {
            e(i, j) = rng.integer(-2, 2);
        }
        p = mul(p, e);
    }
    return p;
}

/// Random invertible rational matrix (retries until the oracle determinant is nonzero).
inline Matrix invertible(Rng& rng, std::size_t n) {
    for (;;) {
        Matrix q(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q(i, j) = rng.rational(2, 2);
        if (!det(q).is_zero()) return q;
    }
}

inline Matrix canonical_nilpotent(std::size_t p) {
    Matrix b(p + 3, p + 3);
    b(0, 1) = 1;  // B e2 = e1
    b(1, 2) = 1;  // B e3 = e2
    return b;
}

inline Matrix canonical_gram(std::size_t p) {
    Matrix g(p + 3, p + 3);
    g(0, 2) = g(2, 0) = -1;
    g(1, 1) = 1;
    for (std::size_t i = 0; i < p; ++i) g(3 + i, 3 + i) = 1;
    return g;
}

inline bool skew_wrt(const Matrix& b, const Matrix& g) {
    const Matrix s = mul(transpose(b), g);
    const Matrix t = mul(g, b);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!(s(i, j) + t(i, j)).is_zero()) return false;
    return true;
}

}  // namespace oracle
