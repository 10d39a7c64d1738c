#pragma once

#include "upb/gadgets.hpp"

namespace upb {

/// Integer 4 x 10 reference matrix for the (q, r, s) = (5, 3, 2) band
/// orthogonality pattern.
Lemma2Matrix fixture_w532();

/// Integer 9 x 12 reference matrix for the k = 2 prism-complement pattern.
Lemma3Matrix fixture_w2();

/// The (6, 1) closed-form matrix (normalized columns); same as build_U_6_1.
Lemma1Matrix fixture_u61();

} // namespace upb
