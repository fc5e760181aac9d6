#pragma once

#include "rescoh/families.hpp"
#include "rescoh/rescohomology.hpp"

namespace rescoh {

// One-dimensional restricted central extension G = g + F c built from an
// even restricted 2-cocycle (phi, omega). The new generator c is appended
// to the even block, is central, and has c^[p] = 0.
struct ExtensionResult {
  POperator extended;
  RestrictedCochain2 cocycle;  // provenance, in the base algebra's coordinates
  std::string name;
  bool split_ordinary = false;
};

// Throws std::invalid_argument for odd/non-homogeneous cocycles and for
// inputs violating a cocycle condition (naming the violated condition).
ExtensionResult central_extension(const POperator& op, const RestrictedCochain2& z,
                                  std::string name = "");

// True iff phi is an ordinary coboundary; requires d2(phi) = 0.
bool is_split_ordinary(const LieSuperalgebra& alg, const Vec& phi);

// True iff z1 - z2 is a restricted coboundary. Both inputs must be even
// restricted cocycles.
bool cocycles_equivalent(const POperator& op, const RestrictedCochain2& z1,
                         const RestrictedCochain2& z2);

// The named extensions of a family member: H_i from the Frobenius cocycles
// (split), X_{s,t} and Y_{k,l} from the wedge cocycles (non-split).
std::vector<ExtensionResult> extension_catalog(const FamilyAlgebra& fam);

}  // namespace rescoh
