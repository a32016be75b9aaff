#include "classifier.hpp"

#include <cassert>

#include "errors.hpp"

namespace ks {

const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::Case1ReducibleLens: return "Case1_ReducibleLens";
        case CaseTag::Case2ReSurgery: return "Case2_ReSurgery";
        case CaseTag::Case3GraphManifold: return "Case3_GraphManifold";
    }
    return "?";
}

CaseTag classify_case(long p, long q, const Slope& r) {
    if (r.is_infinity())
        throw input_error("infinite slope is handled by the knot complement theorem");
    Int npq = r.n() * Int(p) * Int(q);
    if (r.n() == 1 && r.m() == Int(p) * Int(q)) return CaseTag::Case1ReducibleLens;
    if (abs_int(r.m() - npq) == 1) return CaseTag::Case2ReSurgery;
    return CaseTag::Case3GraphManifold;
}

std::vector<Manifold> exterior_jsj(const KnotExpr& raw) {
    KnotExpr k = reroot_unknot_cable(raw);
    switch (k.kind) {
        case KKind::Unknot:
            return {};
        case KKind::Torus:
            return {Manifold::torus_exterior(k.a, k.b)};
        case KKind::Cable: {
            std::vector<Manifold> pieces{Manifold::cable_space(k.p, k.q)};
            for (auto& pc : exterior_jsj(*k.companion)) pieces.push_back(std::move(pc));
            return pieces;
        }
        case KKind::Leaf:
            if (k.declared == LeafClass::Hyperbolic) return {Manifold::exterior_atom(k.name)};
            if (k.declared == LeafClass::SatelliteKnownJSJ)
                throw input_error("satellite leaf '" + k.name + "' has no supplied JSJ piece list");
            throw input_error("leaf '" + k.name + "' has no declared_class; JSJ data unavailable");
    }
    throw input_error("invalid knot expression");
}

bool is_gluing_torus_jsj(const Manifold& adjacent_piece, const Slope& fiber_slope_on_torus,
                         const std::optional<Slope>& other_side_fiber_slope) {
    const bool adjacent_seifert = adjacent_piece.kind == MKind::SFS ||
                                  adjacent_piece.kind == MKind::CableSpace ||
                                  adjacent_piece.kind == MKind::TorusExterior;
    if (!adjacent_seifert) return true;            // hyperbolic side
    if (!other_side_fiber_slope) return true;      // other side atoroidal
    return fiber_slope_on_torus != *other_side_fiber_slope;
}

namespace {

// Regular-fiber slope of the outermost exterior piece of E(k) on its
// boundary torus, or nullopt for a hyperbolic (atoroidal) piece.
std::optional<Slope> outer_fiber_slope(const KnotExpr& k) {
    switch (k.kind) {
        case KKind::Torus:
            return Slope::make(Int(k.a) * Int(k.b), 1);
        case KKind::Cable:
            return Slope::make(Int(k.p) * Int(k.q), 1);
        case KKind::Leaf:
            return std::nullopt;
        case KKind::Unknot:
            break;
    }
    throw input_error("no fiber slope for this expression");
}

// Descriptor of the s-slope surgery on a companion reached through the
// Case2 branch (denominator n*q^2 > 2, so the filling keeps its piece type).
Manifold companion_surgery(const KnotExpr& k, const Slope& s) {
    switch (k.kind) {
        case KKind::Torus: {
            // Seifert fibered (lens or three singular fibers); no JSJ tori.
            Manifold m = Manifold::surgery_atom(k.str(), s, false);
            m.jsj_tori = 0;
            return m;
        }
        case KKind::Cable:
            return surgered_jsj(k, s);
        case KKind::Leaf:
            if (k.declared == LeafClass::Hyperbolic) {
                // Atoroidal: the filling denominator exceeds 2.
                Manifold m = Manifold::surgery_atom(k.str(), s, true);
                m.jsj_tori = 0;
                return m;
            }
            if (k.declared == LeafClass::SatelliteKnownJSJ)
                throw input_error("satellite leaf '" + k.name + "' has no supplied JSJ piece list");
            throw input_error("leaf '" + k.name + "' has no declared_class");
        case KKind::Unknot:
            break;
    }
    throw input_error("unexpected unknot companion in Case2 recursion");
}

}  // namespace

std::pair<CaseTag, Manifold> classify_cable_surgery(long p, long q, const Slope& r,
                                                    const KnotExpr& companion_raw) {
    CaseTag tag = classify_case(p, q, r);
    KnotExpr companion = reroot_unknot_cable(companion_raw);
    if (companion.is_unknot())
        throw input_error("cable of the unknot is a torus knot; no cable classification applies");

    switch (tag) {
        case CaseTag::Case1ReducibleLens: {
            std::vector<Manifold> summands;
            summands.push_back(Manifold::surgery_atom(companion.str(), Slope::make(p, q), false));
            summands.push_back(Manifold::lens(q, p));
            return {tag, Manifold::connected_sum(std::move(summands))};
        }
        case CaseTag::Case2ReSurgery: {
            Int denom = r.n() * Int(q) * Int(q);
            // m = npq +- 1 is coprime to n*q^2, so the slope is already reduced.
            assert(gcd_int(r.m(), denom) == 1);
            Slope s = Slope::make(r.m(), denom);
            return {tag, companion_surgery(companion, s)};
        }
        case CaseTag::Case3GraphManifold: {
            Int m2 = abs_int(r.n() * Int(p) * Int(q) - r.m());
            assert(m2 >= 2);  // |npq - m| in {0,1} is Case1/Case2
            Manifold sfs = Manifold::sfs({Int(std::labs(q)), m2}, 1);
            std::vector<Manifold> pieces = exterior_jsj(companion);
            const int exterior_internal_tori = static_cast<int>(pieces.size()) - 1;
            // SFS_r's regular fiber has slope p/q on the gluing torus.  A
            // hyperbolic adjacent piece makes the torus JSJ regardless of
            // the slope argument.
            std::optional<Slope> adj_fiber = outer_fiber_slope(companion);
            bool outer_jsj =
                pieces.empty() ||
                is_gluing_torus_jsj(pieces.front(), adj_fiber ? *adj_fiber : Slope::infinity(),
                                    Slope::make(p, q));
            int tori = exterior_internal_tori + (outer_jsj ? 1 : 0);
            pieces.push_back(std::move(sfs));
            return {tag, Manifold::graph(std::move(pieces), tori)};
        }
    }
    throw input_error("unreachable case tag");
}

Manifold surgered_jsj(const KnotExpr& raw, const Slope& r) {
    KnotExpr k = reroot_unknot_cable(raw);
    if (r.is_infinity())
        throw input_error("infinite slope is handled by the knot complement theorem");
    if (k.kind != KKind::Cable)
        throw input_error("surgered_jsj expects a cable of a non-trivial knot at the root");
    return classify_cable_surgery(k.p, k.q, r, *k.companion).second;
}

CosmeticVerdict cosmetic_pair_verdict(const KnotExpr& raw, const Slope& r) {
    KnotExpr k = reroot_unknot_cable(raw);
    if (r.is_infinity())
        throw input_error("infinite slope is handled by the knot complement theorem");
    if (r.m() == 0) throw input_error("r = 0 has -r = r; the slopes are not distinct");
    if (k.kind != KKind::Cable)
        throw input_error("cosmetic_pair_verdict expects a cable of a non-trivial knot");

    Slope neg = r.negated();
    CosmeticVerdict out{classify_case(k.p, k.q, r), classify_case(k.p, k.q, neg),
                        DistinguishVerdict{}, surgered_jsj(k, r), surgered_jsj(k, neg)};
    out.verdict = distinguish(out.descriptor_r, out.descriptor_neg_r);
    return out;
}

}  // namespace ks
