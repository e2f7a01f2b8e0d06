#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gonil/homspace.hpp"
#include "gonil/lorentz.hpp"

namespace gonil {

/// The input does not satisfy the hypotheses of the requested verifier.
class HypothesisError : public InputError {
   public:
    using InputError::InputError;
};

struct ImageChain {
    std::vector<std::size_t> dims;
    std::vector<Basis> stages;
};

/// S_0 = V, S_{m+1} = Σ_i maps_i(S_m), until the dimension stops changing.
ImageChain adjoint_image_chain(const std::vector<Matrix>& maps, std::size_t dim);

/// Constrained ad(y)|[n,n] matrix with a11 = a21 = 0: first block row
/// (0 a12 0 | b1), second (0 0 a12 | b2), third zero, then rows (0 −b2_i b1_i | 0).
Matrix constrained_adjoint(const Rational& a12, std::span<const Rational> b1, std::span<const Rational> b2);
Rational trace_of_square(const Matrix& m);

struct Violation {
    std::string check;
    std::string detail;
};

enum class TheoremVerdict { Pass, Fail, HypothesisFailed };
const char* to_string(TheoremVerdict v);

enum class Thm41Branch { AdTrivial, Structured };
const char* to_string(Thm41Branch b);

/// All vectors are in m_span coordinates of the input space.
struct Thm41Report {
    bool hypothesis_ok = true;
    std::vector<std::string> hypothesis_notes;
    Thm41Branch branch = Thm41Branch::AdTrivial;
    std::optional<std::size_t> nilpotency_class;
    Basis derived;
    Basis complement;  ///< v = [n,n]⊥
    std::optional<Vector> x;
    Basis x_tilde;
    /// Columns: the canonical basis e_1..e_{p+3} of [n,n].
    std::optional<Matrix> derived_witness;
    /// ad(x)|[n,n], then ad(x̃_i)|[n,n], in the canonical basis.
    std::vector<Matrix> ad_forms;
    std::vector<Rational> a_vector;
    std::vector<std::size_t> chain_dims;
    std::vector<std::string> flags;
    std::vector<Violation> violations;
    std::optional<std::string> go_evidence;

    [[nodiscard]] TheoremVerdict verdict() const {
        if (!hypothesis_ok) return TheoremVerdict::HypothesisFailed;
        return violations.empty() ? TheoremVerdict::Pass : TheoremVerdict::Fail;
    }
};

struct Thm42Report {
    bool hypothesis_ok = true;
    std::vector<std::string> hypothesis_notes;
    Basis derived;
    Vector radical;  ///< e_{p+1}
    Vector v0;
    Basis v1;
    Basis v2;
    SignatureReport signature_w;
    bool ad_vanishing = false;
    std::optional<std::size_t> nilpotency_class;
    std::vector<std::string> notes;
    std::vector<Violation> violations;
    std::optional<std::string> go_evidence;

    [[nodiscard]] TheoremVerdict verdict() const {
        if (!hypothesis_ok) return TheoremVerdict::HypothesisFailed;
        return violations.empty() ? TheoremVerdict::Pass : TheoremVerdict::Fail;
    }
};

/// Conclusions of the nondegenerate-[n,n] structure theorem for n = m.
/// HypothesisError when m is not a nilpotent subalgebra or [n,n] is degenerate.
Thm41Report verify_thm41(const ReductiveSpace& r);

/// Conclusions of the degenerate-[n,n] structure theorem for n = m.
/// HypothesisError when m is not a nilpotent subalgebra or [n,n] is nondegenerate
/// (the empty form counts as nondegenerate).
Thm42Report verify_thm42(const ReductiveSpace& r);

}  // namespace gonil
