#pragma once

#include "diagram.hpp"
#include "laurent.hpp"

namespace ks {

// Normalized Alexander polynomial via Fox calculus on the Wirtinger
// presentation: abelianized Fox derivatives, one column deleted, exact
// integer Laurent determinant by fraction-free elimination.
Laurent alexander_fox(const OrientedPD& d);

// Normalized Alexander polynomial of the (a,b) torus knot,
// (t^{ab}-1)(t-1) / ((t^a-1)(t^b-1)); parameters of absolute value 1 give 1.
Laurent alexander_torus(long a, long b);

}  // namespace ks
