#pragma once

#include "gonil/errors.hpp"
#include "gonil/linalg.hpp"
#include "gonil/matrix.hpp"

namespace gonil {

/// Symmetric bilinear form given by its Gram matrix.
class BilinearForm {
   public:
    BilinearForm() = default;
    /// Throws InputError unless `gram` is square and symmetric.
    explicit BilinearForm(Matrix gram);

    [[nodiscard]] const Matrix& gram() const noexcept { return gram_; }
    [[nodiscard]] std::size_t dim() const noexcept { return gram_.rows(); }
    [[nodiscard]] Rational operator()(std::span<const Rational> u, std::span<const Rational> v) const;

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

   private:
    Matrix gram_;
};

struct SignatureReport {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t null = 0;
    friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

/// Which sign the single distinguished direction of a Lorentz form carries.
enum class SignatureConvention {
    MostlyPlus,   ///< (n-1, 1): one negative direction
    MostlyMinus,  ///< (1, n-1): one positive direction
};

/// Sylvester signature by exact symmetric congruence. When every remaining
/// diagonal entry vanishes, a hyperbolic pair (i, j) with g_ij != 0 is folded
/// into e_i + e_j before pivoting.
SignatureReport signature(const BilinearForm& f);

/// Echelon basis of the kernel of the Gram matrix.
Basis radical(const BilinearForm& f);
bool is_nondegenerate(const BilinearForm& f);

/// { v : F(v, s) = 0 for all s in S }, as an echelon basis of the ambient space.
Basis orthocomplement(const BilinearForm& f, const Basis& subspace);

/// Pull-back of F to the given basis: Pᵀ G P with P = [s_1 ... s_k].
BilinearForm restrict(const BilinearForm& f, const Basis& subspace);

bool is_lorentz(const BilinearForm& f, SignatureConvention convention = SignatureConvention::MostlyPlus);
bool is_definite(const BilinearForm& f);

}  // namespace gonil
