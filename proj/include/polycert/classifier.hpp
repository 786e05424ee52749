#ifndef POLYCERT_CLASSIFIER_HPP
#define POLYCERT_CLASSIFIER_HPP

#include "polycert/families.hpp"

#include <optional>
#include <string>

namespace polycert {

// Outcome of matching a rational function against the canonical families.
// When matched, apply_frame(build_family without frame, spec.frame) equals
// the input identically; exact is never set without that equality.
struct FamilyMatch {
    bool matched = false;
    std::string no_match_reason;
    FamilySpec spec;
    long m = 0;
    Poly s;  // the f/f'' evidence, when it exists
    bool exact = false;
};

// Recovers which of the power/F2/F3/F4 families f is, together with the
// affine frame, from the root structure of S = f/f''. Works whether or not
// f satisfies the real-rootedness hypotheses; callers report those
// separately. Requires f nonconstant.
FamilyMatch classify(const RatFun& f);

// K and 1/K parametrize the same F3 orbit; the canonical representative has
// |K| >= 1. Requires K not in {0, 1}.
Rat canonicalize_K(const Rat& K);

// Computes a1 as the ratio of leading numerator coefficients of input and
// apply_frame(canonical, (1, a2, a3)), then verifies full exact equality.
// Returns nullopt when any coefficient disagrees. Requires a2 != 0 and
// canonical not identically zero.
std::optional<Rat> recover_frame(const RatFun& input, const RatFun& canonical, const Rat& a2,
                                 const Rat& a3);

}  // namespace polycert

#endif
