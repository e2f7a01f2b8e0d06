#include "gonil/linalg.hpp"

#include "gonil/errors.hpp"

namespace gonil {

Echelon row_reduce(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const Rational> b) {
    if (a.rows() != b.size()) throw InputError("solve_linear: A has " + std::to_string(a.rows()) +
                                               " rows but b has length " + std::to_string(b.size()));
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    const Echelon e = row_reduce(aug);
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == n) return std::nullopt;

    LinearSolution sol;
    sol.particular = Vector(n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
        sol.particular[e.pivot_columns[i]] = e.reduced(i, n);
        is_pivot[e.pivot_columns[i]] = true;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

Basis kernel_basis(const Matrix& a) {
    return solve_linear(a, Vector(a.rows()))->kernel;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) throw InputError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    const Echelon e = row_reduce(aug);
    if (e.rank() < n || (n > 0 && e.pivot_columns[n - 1] != n - 1)) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

namespace {

Matrix stack(const Basis& span, std::size_t dim) { return Matrix::from_rows(span, dim); }

}  // namespace

Basis echelon_basis(const Basis& span, std::size_t dim) {
    const Echelon e = row_reduce(stack(span, dim));
    Basis out;
    for (std::size_t i = 0; i < e.rank(); ++i) out.push_back(e.reduced.row(i));
    return out;
}

std::size_t span_dimension(const Basis& span, std::size_t dim) { return rank(stack(span, dim)); }

bool span_contains(const Basis& span, std::span<const Rational> v, std::size_t dim) {
    if (is_zero(v)) return true;
    Basis ext = span;
    ext.emplace_back(v.begin(), v.end());
    return span_dimension(ext, dim) == span_dimension(span, dim);
}

bool is_subspace_of(const Basis& inner, const Basis& outer, std::size_t dim) {
    return span_dimension(span_sum(inner, outer, dim), dim) == span_dimension(outer, dim);
}

Basis span_sum(const Basis& a, const Basis& b, std::size_t dim) {
    Basis all = a;
    all.insert(all.end(), b.begin(), b.end());
    return echelon_basis(all, dim);
}

Basis span_intersection(const Basis& a, const Basis& b, std::size_t dim) {
    const Basis ea = echelon_basis(a, dim);
    const Basis eb = echelon_basis(b, dim);
    // x = Σ s_i a_i = Σ t_j b_j  <=>  [A | -B] (s, t) = 0.
    Matrix m(dim, ea.size() + eb.size());
    for (std::size_t i = 0; i < ea.size(); ++i)
        for (std::size_t r = 0; r < dim; ++r) m(r, i) = ea[i][r];
    for (std::size_t j = 0; j < eb.size(); ++j)
        for (std::size_t r = 0; r < dim; ++r) m(r, ea.size() + j) = -eb[j][r];
    Basis out;
    for (const auto& k : kernel_basis(m)) {
        Vector x(dim);
        for (std::size_t i = 0; i < ea.size(); ++i) axpy(x, k[i], ea[i]);
        out.push_back(std::move(x));
    }
    return echelon_basis(out, dim);
}

std::optional<Vector> coordinates(const Basis& independent, std::span<const Rational> v, std::size_t dim) {
    if (v.size() != dim) throw InputError("coordinates: vector length mismatch");
    const Matrix cols = Matrix::from_columns(independent, dim);
    auto sol = solve_linear(cols, v);
    if (!sol) return std::nullopt;
    if (!sol->kernel.empty()) throw InputError("coordinates: spanning list is not linearly independent");
    return std::move(sol->particular);
}

bool linearly_independent(const Basis& vs, std::size_t dim) { return span_dimension(vs, dim) == vs.size(); }

namespace {

Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

}  // namespace

Polynomial minimal_polynomial(const Matrix& a) {
    if (!a.is_square()) throw InputError("minimal_polynomial: matrix is " + std::to_string(a.rows()) + "x" +
                                         std::to_string(a.cols()) + ", not square");
    const std::size_t n = a.rows();
    std::vector<Vector> powers;
    Matrix p = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        const Vector flat = flatten(p);
        if (!powers.empty()) {
            // Solve Σ c_i vec(A^i) = vec(A^k) over the earlier powers.
            const Matrix cols = Matrix::from_columns(powers, n * n);
            if (auto sol = solve_linear(cols, flat)) {
                std::vector<Rational> co(k + 1);
                for (std::size_t i = 0; i < k; ++i) co[i] = -sol->particular[i];
                co[k] = 1;
                return Polynomial(std::move(co));
            }
        } else if (n == 0) {
            return Polynomial({Rational(1)});
        }
        powers.push_back(flat);
        p = p * a;
    }
    throw std::logic_error("minimal_polynomial: Cayley-Hamilton bound exceeded");
}

NilpotencyReport is_nilpotent_operator(const Matrix& a) {
    if (!a.is_square()) throw InputError("is_nilpotent_operator: matrix not square");
    const std::size_t n = a.rows();
    Matrix p = Matrix::identity(n);
    for (std::size_t m = 0; m <= n; ++m) {
        if (p.is_zero()) return {true, m};
        p = p * a;
    }
    return {false, std::nullopt};
}

}  // namespace gonil
