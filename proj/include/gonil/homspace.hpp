#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gonil/bilinear.hpp"
#include "gonil/errors.hpp"
#include "gonil/lie.hpp"

namespace gonil {

/// Coordinate projectors of g = m ⊕ h, acting on g-coordinates.
struct Projection {
    Matrix to_m;
    Matrix to_h;
};

/// First failing reductive-space invariant, with basis indices of the witness.
class ValidationError : public InputError {
   public:
    enum class Kind { NotDirectSum, NotSubalgebra, NotReductive, MetricNotInvariant, BadMetric };

    ValidationError(Kind kind, std::vector<std::size_t> witness, const std::string& what);
    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    /// Basis indices into h_span / m_span, in the order named by the kind.
    [[nodiscard]] const std::vector<std::size_t>& witness() const noexcept { return witness_; }

   private:
    Kind kind_;
    std::vector<std::size_t> witness_;
};

const char* to_string(ValidationError::Kind kind);

/// Homogeneous-space data: g with a reductive splitting g = m ⊕ h and an
/// ad(h)-skew inner product on m, given in the coordinates of m_span.
class ReductiveSpace {
   public:
    /// Verifies, in order: direct sum, h subalgebra, [h, m] ⊆ m, and
    /// <[η,ξ]_m, ζ> + <ξ, [η,ζ]_m> = 0 on basis triples (η ∈ h; ξ, ζ ∈ m).
    static ReductiveSpace build(LieAlgebra g, Basis h_span, Basis m_span, BilinearForm metric);

    [[nodiscard]] const LieAlgebra& algebra() const noexcept { return g_; }
    [[nodiscard]] const Basis& h_span() const noexcept { return h_; }
    [[nodiscard]] const Basis& m_span() const noexcept { return m_; }
    [[nodiscard]] const BilinearForm& metric() const noexcept { return metric_; }
    [[nodiscard]] const Projection& projection() const noexcept { return proj_; }
    [[nodiscard]] std::size_t dim() const noexcept { return g_.dim(); }
    [[nodiscard]] std::size_t m_dim() const noexcept { return m_.size(); }
    [[nodiscard]] std::size_t h_dim() const noexcept { return h_.size(); }

    /// Coordinates of the m-component of ξ in the m_span basis.
    [[nodiscard]] Vector m_coordinates(std::span<const Rational> xi) const;
    /// Coordinates of the h-component of ξ in the h_span basis.
    [[nodiscard]] Vector h_coordinates(std::span<const Rational> xi) const;
    /// g-vector with the given m_span coordinates.
    [[nodiscard]] Vector from_m_coordinates(std::span<const Rational> coords) const;
    [[nodiscard]] Vector from_h_coordinates(std::span<const Rational> coords) const;
    /// <u_m, v_m> for g-vectors u, v.
    [[nodiscard]] Rational inner(std::span<const Rational> u, std::span<const Rational> v) const;
    /// [u, v]_m as a g-vector.
    [[nodiscard]] Vector bracket_m(std::span<const Rational> u, std::span<const Rational> v) const;
    [[nodiscard]] bool in_m(std::span<const Rational> xi) const;

    friend bool operator==(const ReductiveSpace& a, const ReductiveSpace& b) {
        return a.g_ == b.g_ && a.h_ == b.h_ && a.m_ == b.m_ && a.metric_ == b.metric_;
    }

   private:
    ReductiveSpace() = default;

    LieAlgebra g_;
    Basis h_;
    Basis m_;
    BilinearForm metric_;
    Projection proj_;
    Matrix to_coords_;  // g-coordinates -> (m coords, h coords)
};

struct ProjectedVector {
    Vector m_part;
    Vector h_part;
};

ProjectedVector project(const ReductiveSpace& r, std::span<const Rational> xi);

struct NaturalReductivity {
    bool holds = true;
    /// First violating triple (ξ, ζ, η) of m_span indices, when it fails.
    std::optional<std::array<std::size_t, 3>> witness;
    Rational value;
};

/// Checks <[ξ,ζ]_m, η> + <ζ, [ξ,η]_m> = 0 for all m-basis triples, lexicographically.
NaturalReductivity is_naturally_reductive(const ReductiveSpace& r);

/// Matrix, in m_span coordinates, of π_m ∘ ad(x)|_m.
Matrix ad_on_m(const ReductiveSpace& r, std::span<const Rational> x);

}  // namespace gonil
