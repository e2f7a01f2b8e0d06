#include "gonil/bilinear.hpp"

#include "gonil/errors.hpp"

namespace gonil {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw InputError("Gram matrix is not square");
    if (!gram_.is_symmetric()) throw InputError("Gram matrix is not symmetric");
}

Rational BilinearForm::operator()(std::span<const Rational> u, std::span<const Rational> v) const {
    return dot(u, gram_ * v);
}

namespace {

void swap_index(Matrix& g, std::size_t a, std::size_t b) {
    if (a == b) return;
    const std::size_t n = g.rows();
    for (std::size_t c = 0; c < n; ++c) std::swap(g(a, c), g(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(g(r, a), g(r, b));
}

// Replaces basis vector i by e_i + e_j (row and column operation).
void fold_into(Matrix& g, std::size_t i, std::size_t j) {
    const std::size_t n = g.rows();
    for (std::size_t c = 0; c < n; ++c) g(i, c) += g(j, c);
    for (std::size_t r = 0; r < n; ++r) g(r, i) += g(r, j);
}

}  // namespace

SignatureReport signature(const BilinearForm& f) {
    Matrix g = f.gram();
    const std::size_t n = g.rows();
    SignatureReport rep;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && g(p, p).is_zero()) ++p;
        if (p == n) {
            bool folded = false;
            for (std::size_t i = k; i < n && !folded; ++i)
                for (std::size_t j = i + 1; j < n && !folded; ++j)
                    if (!g(i, j).is_zero()) {
                        fold_into(g, i, j);
                        p = i;
                        folded = true;
                    }
            if (!folded) {
                rep.null += n - k;
                break;
            }
        }
        swap_index(g, k, p);
        const Rational inv = g(k, k).inverse();
        for (std::size_t r = k + 1; r < n; ++r) {
            if (g(r, k).is_zero()) continue;
            const Rational factor = g(r, k) * inv;
            for (std::size_t c = k; c < n; ++c) g(r, c) -= factor * g(k, c);
            for (std::size_t c = k; c < n; ++c) g(c, r) = g(r, c);
        }
        (g(k, k).sign() > 0 ? rep.positive : rep.negative) += 1;
    }
    return rep;
}

Basis radical(const BilinearForm& f) { return echelon_basis(kernel_basis(f.gram()), f.dim()); }

bool is_nondegenerate(const BilinearForm& f) { return rank(f.gram()) == f.dim(); }

Basis orthocomplement(const BilinearForm& f, const Basis& subspace) {
    const std::size_t n = f.dim();
    if (subspace.empty()) {
        Basis all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
        return all;
    }
    std::vector<Vector> rows;
    rows.reserve(subspace.size());
    for (const auto& s : subspace) rows.push_back(f.gram() * s);  // G symmetric: (Gs)ᵀ v = F(s, v)
    return echelon_basis(kernel_basis(Matrix::from_rows(rows, n)), n);
}

BilinearForm restrict(const BilinearForm& f, const Basis& subspace) {
    const std::size_t k = subspace.size();
    Matrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const Vector gi = f.gram() * subspace[i];
        for (std::size_t j = i; j < k; ++j) g(i, j) = g(j, i) = dot(gi, subspace[j]);
    }
    return BilinearForm(std::move(g));
}

bool is_lorentz(const BilinearForm& f, SignatureConvention convention) {
    const SignatureReport s = signature(f);
    if (s.null != 0) return false;
    return convention == SignatureConvention::MostlyPlus ? s.negative == 1 : s.positive == 1;
}

bool is_definite(const BilinearForm& f) {
    const SignatureReport s = signature(f);
    return s.null == 0 && (s.positive == 0 || s.negative == 0);
}

}  // namespace gonil
