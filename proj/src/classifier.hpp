#pragma once

#include "knot_expr.hpp"
#include "manifold.hpp"
#include "slope.hpp"

namespace ks {

enum class CaseTag { Case1ReducibleLens, Case2ReSurgery, Case3GraphManifold };

const char* case_name(CaseTag t);

// Case arithmetic for r = m/n surgery on a (p,q)-cable:
// Case1 iff r = pq/1, Case2 iff |m - npq| = 1, Case3 otherwise.
CaseTag classify_case(long p, long q, const Slope& r);

// JSJ pieces of the knot exterior E(k): cable towers peel off cable spaces,
// torus knots and declared hyperbolic leaves are single atoms, the unknot
// exterior is empty (solid torus, excluded upstream).
std::vector<Manifold> exterior_jsj(const KnotExpr& k);

// False iff both sides are Seifert fibered with matching regular-fiber
// slopes on the common torus; a hyperbolic side (or atoroidal marker on the
// other side) always gives true.
bool is_gluing_torus_jsj(const Manifold& adjacent_piece, const Slope& fiber_slope_on_torus,
                         const std::optional<Slope>& other_side_fiber_slope);

// Classification of the surgered manifold, with the Case2 branch resolved
// recursively and Case3 annotated via is_gluing_torus_jsj.
std::pair<CaseTag, Manifold> classify_cable_surgery(long p, long q, const Slope& r,
                                                    const KnotExpr& companion);

// Full annotated JSJ descriptor of the r-surgery on a cable knot expression.
Manifold surgered_jsj(const KnotExpr& k, const Slope& r);

struct CosmeticVerdict {
    CaseTag case_r;
    CaseTag case_neg_r;
    DistinguishVerdict verdict;
    Manifold descriptor_r;
    Manifold descriptor_neg_r;
};

// Compares the r and -r surgeries on a cable knot.  r must be finite and
// nonzero.
CosmeticVerdict cosmetic_pair_verdict(const KnotExpr& k, const Slope& r);

}  // namespace ks
