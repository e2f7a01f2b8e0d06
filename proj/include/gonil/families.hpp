#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gonil/homspace.hpp"

namespace gonil {

enum class Family { Filiform, Structure1, FreeNilpotentQuotient };
const char* to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

enum class HStrategy { None, SkewDerivations };
const char* to_string(HStrategy h);
std::optional<HStrategy> parse_h_strategy(std::string_view s);

/// Shape of one member of a family; the remaining freedom is `params`.
///   Filiform: dim n; params = n diagonal Gram entries, then the <e_0, e_{n-1}> coupling.
///   Structure1: (p, s); params = a_1..a_p, t, u, then s+1 diagonal entries on v.
///   FreeNilpotentQuotient: (rank, step); params = one Gram scale per degree, then
///   the coupling between the first generator and the last basis vector.
struct Layout {
    std::size_t dim = 0;
    std::size_t p = 0;
    std::size_t s = 0;
    std::size_t rank = 0;
    std::size_t step = 0;
    friend bool operator==(const Layout&, const Layout&) = default;
};

struct CandidateSpec {
    Family family = Family::Filiform;
    Layout layout;
    std::vector<Rational> params;
    HStrategy h_strategy = HStrategy::None;
    std::uint64_t index = 0;
    friend bool operator==(const CandidateSpec&, const CandidateSpec&) = default;
};

/// Parameter count of a layout.
std::size_t param_count(Family f, const Layout& l);
/// Layouts of the family whose nilpotent algebra has dimension in [lo, hi], in order.
std::vector<Layout> layouts_for(Family f, std::size_t lo, std::size_t hi);

/// Deterministic random-access enumeration: lexicographic over grid indices,
/// layouts in increasing order.
class CandidateGrid {
   public:
    CandidateGrid(Family f, std::size_t dim_lo, std::size_t dim_hi, std::vector<Rational> grid, HStrategy h);
    [[nodiscard]] std::uint64_t size() const noexcept { return total_; }
    [[nodiscard]] CandidateSpec at(std::uint64_t index) const;

   private:
    Family family_;
    std::vector<Rational> grid_;
    HStrategy h_;
    std::vector<Layout> layouts_;
    std::vector<std::uint64_t> offsets_;  // first index of each layout
    std::uint64_t total_ = 0;
};

struct Rejection {
    std::string reason;  ///< "jacobi", "non_lorentz", "non_reductive", "invalid"
    std::string detail;
    std::optional<std::array<std::size_t, 3>> triple;
};

struct Instance {
    ReductiveSpace space;
    std::size_t h_dim = 0;
};

using Instantiation = std::variant<Instance, Rejection>;

/// Nilpotent algebra and metric of the spec; Rejection for a Jacobi failure.
std::variant<std::pair<LieAlgebra, BilinearForm>, Rejection> build_nilpotent(const CandidateSpec& spec);
Instantiation instantiate(const CandidateSpec& spec);

/// Basis of { D : D[x,y] = [Dx,y] + [x,Dy], Dᵀ G + G D = 0 } as matrices.
std::vector<Matrix> skew_derivations(const LieAlgebra& n, const BilinearForm& g);

/// n ⋊ span(derivations): n keeps indices 0..dim-1, h follows.
/// InputError when the derivations are not closed under the commutator.
LieAlgebra semidirect(const LieAlgebra& n, const std::vector<Matrix>& derivations);

/// Free nilpotent Lie algebra of the given rank and step, basis ordered by degree.
struct FreeNilpotent {
    LieAlgebra algebra;
    std::vector<std::size_t> degree;
};
FreeNilpotent free_nilpotent(std::size_t rank, std::size_t step);

/// Standard filiform algebra: [e_0, e_i] = e_{i+1} for 1 ≤ i ≤ n-2.
LieAlgebra filiform(std::size_t n);

}  // namespace gonil
