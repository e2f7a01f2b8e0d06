#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gonil/bilinear.hpp"
#include "gonil/polynomial.hpp"

namespace gonil {

/// B ∈ so(G): Bᵀ G + G B = 0. InputError if G is degenerate or the sizes differ.
bool check_skew(const Matrix& b, const BilinearForm& g);

enum class CanonicalKind { Zero, Semisimple, NonSemisimple, UndecidedExact };
const char* to_string(CanonicalKind k);

struct Classification {
    CanonicalKind kind = CanonicalKind::Zero;
    /// Real eigenvalue pair ±μ, normalized to μ ≤ 0 (exact; 0 when absent).
    std::optional<Rational> mu;
    /// Floating estimate of μ, only for UndecidedExact.
    std::optional<double> mu_estimate;
    std::size_t c_block_dim = 0;
    Polynomial minimal_polynomial;
};

/// Semisimple iff the minimal polynomial is squarefree. Requires B skew for
/// a Lorentz G (either sign convention); InputError otherwise.
Classification classify(const Matrix& b, const BilinearForm& g);

/// Canonical nilpotent matrix: a 3×3 nilpotent Jordan block (B e2 = e1, B e3 = e2)
/// followed by a zero block of size p.
Matrix canonical_nilpotent_matrix(std::size_t p);
/// Gram matrix with −<e1,e3> = <e2,e2> = 1 on the first three vectors and I_p after.
Matrix canonical_nilpotent_gram(std::size_t p);

struct CanonicalForm {
    Classification kind;
    Matrix witness;  ///< P: columns are the new basis vectors
    Matrix canonical_matrix;
    Matrix canonical_gram;
    /// NONUNIT_SCALE when <Bv,Bv> is not a rational square, NONUNIT_COMPLEMENT
    /// when the complement could not be made exactly orthonormal.
    std::vector<std::string> flags;
    /// <e2,e2> of the constructed triple (1 unless NONUNIT_SCALE).
    Rational scale{1};
};

/// Witness basis for a nonzero nilpotent skew B. StructuralError when B is not
/// nilpotent with B³ = 0. Both P⁻¹BP = canonical_matrix and PᵀGP = canonical_gram
/// are re-checked before returning.
CanonicalForm nilpotent_witness_basis(const Matrix& b, const BilinearForm& g);

}  // namespace gonil
