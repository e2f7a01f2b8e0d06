#include "gonil/homspace.hpp"

#include <array>

namespace gonil {

ValidationError::ValidationError(Kind kind, std::vector<std::size_t> witness, const std::string& what)
    : InputError(std::string(to_string(kind)) + ": " + what), kind_(kind), witness_(std::move(witness)) {}

const char* to_string(ValidationError::Kind kind) {
    switch (kind) {
        case ValidationError::Kind::NotDirectSum: return "NotDirectSum";
        case ValidationError::Kind::NotSubalgebra: return "NotSubalgebra";
        case ValidationError::Kind::NotReductive: return "NotReductive";
        case ValidationError::Kind::MetricNotInvariant: return "MetricNotInvariant";
        case ValidationError::Kind::BadMetric: return "BadMetric";
    }
    return "?";
}

ReductiveSpace ReductiveSpace::build(LieAlgebra g, Basis h_span, Basis m_span, BilinearForm metric) {
    using Kind = ValidationError::Kind;
    const std::size_t n = g.dim();
    for (const auto* span : {&h_span, &m_span})
        for (const auto& v : *span)
            if (v.size() != n) throw InputError("span vector has length " + std::to_string(v.size()) +
                                                " but the algebra has dimension " + std::to_string(n));
    if (metric.dim() != m_span.size())
        throw ValidationError(Kind::BadMetric, {},
                              "metric is " + std::to_string(metric.dim()) + "-dimensional but m has " +
                                  std::to_string(m_span.size()) + " basis vectors");

    ReductiveSpace r;
    r.g_ = std::move(g);
    r.h_ = std::move(h_span);
    r.m_ = std::move(m_span);
    r.metric_ = std::move(metric);

    Basis joint = r.m_;
    joint.insert(joint.end(), r.h_.begin(), r.h_.end());
    if (joint.size() != n || !linearly_independent(joint, n))
        throw ValidationError(Kind::NotDirectSum, {},
                              "h and m bases are not jointly a basis of g (" + std::to_string(r.h_.size()) + " + " +
                                  std::to_string(r.m_.size()) + " vectors, dim g = " + std::to_string(n) + ")");
    auto inv = inverse(Matrix::from_columns(joint, n));
    r.to_coords_ = std::move(*inv);

    const std::size_t mk = r.m_.size();
    Matrix keep_m(n, n);
    for (std::size_t i = 0; i < mk; ++i) keep_m(i, i) = 1;
    const Matrix q = Matrix::from_columns(joint, n);
    r.proj_.to_m = q * keep_m * r.to_coords_;
    r.proj_.to_h = Matrix::identity(n) - r.proj_.to_m;

    for (std::size_t a = 0; a < r.h_.size(); ++a)
        for (std::size_t b = a + 1; b < r.h_.size(); ++b) {
            const Vector br = r.g_.bracket(r.h_[a], r.h_[b]);
            if (!is_zero(r.m_coordinates(br)))
                throw ValidationError(Kind::NotSubalgebra, {a, b},
                                      "[h_" + std::to_string(a) + ", h_" + std::to_string(b) + "] leaves h");
        }

    for (std::size_t a = 0; a < r.h_.size(); ++a)
        for (std::size_t b = 0; b < mk; ++b) {
            const Vector br = r.g_.bracket(r.h_[a], r.m_[b]);
            if (!is_zero(r.h_coordinates(br)))
                throw ValidationError(Kind::NotReductive, {a, b},
                                      "[h_" + std::to_string(a) + ", m_" + std::to_string(b) + "] leaves m");
        }

    for (std::size_t a = 0; a < r.h_.size(); ++a) {
        const Matrix d = ad_on_m(r, r.h_[a]);
        // <D e_i, e_j> + <e_i, D e_j> = (Dᵀ G + G D)_ij
        const Matrix s = d.transpose() * r.metric_.gram() + r.metric_.gram() * d;
        for (std::size_t i = 0; i < mk; ++i)
            for (std::size_t j = i; j < mk; ++j)
                if (!s(i, j).is_zero())
                    throw ValidationError(Kind::MetricNotInvariant, {a, i, j},
                                          "<[h_" + std::to_string(a) + ", m_" + std::to_string(i) + "], m_" +
                                              std::to_string(j) + "> + <m_" + std::to_string(i) + ", [h_" +
                                              std::to_string(a) + ", m_" + std::to_string(j) +
                                              "]> = " + s(i, j).str());
    }
    return r;
}

Vector ReductiveSpace::m_coordinates(std::span<const Rational> xi) const {
    const Vector all = to_coords_ * xi;
    return Vector(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m_.size()));
}

Vector ReductiveSpace::h_coordinates(std::span<const Rational> xi) const {
    const Vector all = to_coords_ * xi;
    return Vector(all.begin() + static_cast<std::ptrdiff_t>(m_.size()), all.end());
}

Vector ReductiveSpace::from_m_coordinates(std::span<const Rational> coords) const {
    return combine(coords, m_, g_.dim());
}

Vector ReductiveSpace::from_h_coordinates(std::span<const Rational> coords) const {
    return combine(coords, h_, g_.dim());
}

Rational ReductiveSpace::inner(std::span<const Rational> u, std::span<const Rational> v) const {
    return metric_(m_coordinates(u), m_coordinates(v));
}

Vector ReductiveSpace::bracket_m(std::span<const Rational> u, std::span<const Rational> v) const {
    return proj_.to_m * g_.bracket(u, v);
}

bool ReductiveSpace::in_m(std::span<const Rational> xi) const { return is_zero(h_coordinates(xi)); }

ProjectedVector project(const ReductiveSpace& r, std::span<const Rational> xi) {
    if (xi.size() != r.dim()) throw InputError("project: vector length mismatch");
    return {r.projection().to_m * xi, r.projection().to_h * xi};
}

Matrix ad_on_m(const ReductiveSpace& r, std::span<const Rational> x) {
    const std::size_t mk = r.m_dim();
    Matrix d(mk, mk);
    for (std::size_t j = 0; j < mk; ++j) {
        const Vector c = r.m_coordinates(r.algebra().bracket(x, r.m_span()[j]));
        for (std::size_t i = 0; i < mk; ++i) d(i, j) = c[i];
    }
    return d;
}

NaturalReductivity is_naturally_reductive(const ReductiveSpace& r) {
    const std::size_t mk = r.m_dim();
    const Matrix& gram = r.metric().gram();
    for (std::size_t a = 0; a < mk; ++a) {
        const Matrix d = ad_on_m(r, r.m_span()[a]);
        const Matrix s = d.transpose() * gram + gram * d;  // s(ζ, η) = <[ξ,ζ]_m, η> + <ζ, [ξ,η]_m>
        for (std::size_t z = 0; z < mk; ++z)
            for (std::size_t e = 0; e < mk; ++e)
                if (!s(z, e).is_zero()) return {false, std::array<std::size_t, 3>{a, z, e}, s(z, e)};
    }
    return {};
}

}  // namespace gonil
