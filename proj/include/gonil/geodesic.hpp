#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "gonil/homspace.hpp"

namespace gonil {

/// Witness (α, k) for one direction ξ ∈ m:
///   <[ξ + α, ζ]_m, ξ> − k<ζ, ξ> = 0 for every basis ζ of m.
struct GeodesicSolution {
    Vector alpha;         ///< g-coordinates, lies in h
    Vector alpha_coords;  ///< h_span coordinates
    Rational k;
    Vector residuals;     ///< one per m basis vector; all zero
    /// Homogeneous directions in (h_span coords, k) space.
    Basis freedom;
};

/// No (α, k) exists: ξ is a certified GO counterexample direction.
struct Infeasible {
    Vector xi;
};

using AlphaResult = std::variant<GeodesicSolution, Infeasible>;

/// The constant k for which ξ is a geodesic vector, if any. InputError if ξ = 0.
std::optional<Rational> geodesic_vector_k(const ReductiveSpace& r, std::span<const Rational> xi);

/// Solves for (α, k). ξ must lie in m (InputError otherwise).
AlphaResult solve_alpha(const ReductiveSpace& r, std::span<const Rational> xi);

/// <[ξ + α, ζ_j]_m, ξ> − k<ζ_j, ξ> for each m basis vector ζ_j.
Vector geodesic_residuals(const ReductiveSpace& r, std::span<const Rational> xi, std::span<const Rational> alpha,
                          const Rational& k);

enum class GoStatus { ProvenNatred, SampledPass, Counterexample };
const char* to_string(GoStatus s);

struct GoParams {
    std::size_t n_samples = 100;
    std::uint64_t seed = 0;
    /// Extra stream id mixed into the sample seeds (search uses the spec index).
    std::uint64_t stream = 0;
    /// Exhaustive integer grid {−d..d}^dim m when set.
    std::optional<int> grid_depth;
};

struct GoVerdict {
    GoStatus status = GoStatus::SampledPass;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
    /// Directions run through solve_alpha before stopping.
    std::size_t directions_checked = 0;
    /// m-vector (g-coordinates) of the first infeasible direction.
    std::optional<Vector> counterexample;
    std::string notes;
};

/// Layered GO evidence: natural reductivity proves it outright; otherwise
/// basis vectors, pairwise sums, seeded samples and the optional grid are
/// checked in that order, and the first infeasible direction is returned.
GoVerdict go_certify(const ReductiveSpace& r, const GoParams& params);

/// i-th sampled direction in m_span coordinates: numerators in {−3..3},
/// denominators in {1, 2}. Depends only on (seed, stream, index).
Vector sample_direction(std::size_t m_dim, std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Affine parameter of the orbit curve: t itself when k = 0, else e^{−kt}.
struct AffineParameter {
    std::optional<Rational> value;  ///< exact value when it is rational
    std::string expression;
};

/// `t` absent means the symbolic parameter t.
AffineParameter affine_parameter(const Rational& k, const std::optional<Rational>& t);

}  // namespace gonil
