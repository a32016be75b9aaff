#pragma once

#include "diagram.hpp"
#include "laurent.hpp"

namespace ks {

inline constexpr int kDefaultMaxCrossings = 26;

// Kauffman bracket in the variable A, by exhaustive state enumeration.
Laurent kauffman_bracket(const OrientedPD& d);

// Jones polynomial in t (t = A^-4, V(unknot) = 1), writhe-corrected bracket.
// Throws resource_limit_error when the crossing count exceeds the cap.
Laurent jones(const OrientedPD& d, int max_crossings = kDefaultMaxCrossings);

// Same invariant for a braid closure, via the Temperley-Lieb trace; handles
// larger crossing counts than the state sum.
Laurent jones_braid(const BraidWord& b, int max_crossings = kDefaultMaxCrossings);

}  // namespace ks
