#ifndef LOCAUT_AUTGROUP_HPP
#define LOCAUT_AUTGROUP_HPP

#include "locaut/sln.hpp"

#include <optional>

namespace locaut {

enum class Twist { Identity, Transpose };

/// X -> sign * A^{-1} * X^twist * A with invertible A.
/// (+1, id) and (-1, transpose) are automorphism forms;
/// (-1, id) and (+1, transpose) are anti-automorphism forms.
struct SignedAuto {
    std::size_t n;
    int sign; // +1 or -1
    Twist twist;
    Mat A;

    bool is_automorphism_form() const {
        return (sign > 0) == (twist == Twist::Identity);
    }
};

SignedAuto make_inner(Mat a);      // X ->  A^{-1} X A
SignedAuto make_outer(Mat a);      // X -> -A^{-1} X^T A
SignedAuto make_anti(Mat a);       // X ->  A^{-1} X^T A
SignedAuto make_neg_inner(Mat a);  // X -> -A^{-1} X A

/// Arbitrary linear endomorphism of sl_n in the canonical basis.
struct LinMap {
    std::size_t n;
    Mat M; // (n^2-1) x (n^2-1)

    SlElement operator()(const SlElement& x) const;
};

enum class MorphismVerdict { Automorphism, AntiAutomorphism, Neither };

SlElement apply(const SignedAuto& phi, const SlElement& x);
/// Composition acting as x -> apply(phi, apply(psi, x)).
SignedAuto compose(const SignedAuto& phi, const SignedAuto& psi);
SignedAuto inverse_auto(const SignedAuto& phi);
LinMap induced_matrix(const SignedAuto& phi);

/// Bijectivity plus the bracket identity on all basis pairs (complete by
/// bilinearity).
MorphismVerdict check_bracket_morphism(const LinMap& map);

/// Recovers a normal form (sign, twist, A) whose induced matrix equals the
/// input, when the input is a bracket morphism. A is normalized so its first
/// nonzero entry (row-major) is 1. For n = 2 only untwisted forms are
/// returned: conjugations for automorphisms, X -> -A^{-1}XA for
/// anti-automorphisms.
std::optional<SignedAuto> recognize(const LinMap& map);

/// Same, with the bracket-morphism verdict already known.
std::optional<SignedAuto> recognize(const LinMap& map, MorphismVerdict verdict);

} // namespace locaut

#endif
