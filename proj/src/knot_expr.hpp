#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"

namespace ks {

enum class KKind { Unknot, Torus, Cable, Leaf };
enum class LeafClass { Unknown, Hyperbolic, SatelliteKnownJSJ };
enum class LeafSource { None, PD, Braid, Invariants };

// Expression tree: unknot / torus knot / cable-of / named leaf.
struct KnotExpr {
    KKind kind = KKind::Unknot;

    // Torus(a,b): |a|,|b| >= 2, coprime.
    long a = 0, b = 0;

    // Cable params, normalized to q >= 2 (inputs with q <= -2 flip both signs).
    long p = 0, q = 0;
    std::shared_ptr<KnotExpr> companion;

    // Leaf data.
    std::string name;
    LeafSource source = LeafSource::None;
    PDCode pd;
    BraidWord braid;
    std::optional<Laurent> alex_table;  // user-supplied Alexander polynomial
    LeafClass declared = LeafClass::Unknown;
    std::optional<long> tau;

    static KnotExpr unknot();
    static KnotExpr torus(long a, long b);
    static KnotExpr cable(long p, long q, KnotExpr companion);
    static KnotExpr leaf_braid(std::string name, BraidWord b, LeafClass cls,
                               std::optional<long> tau = std::nullopt);
    static KnotExpr leaf_pd(std::string name, PDCode pd, LeafClass cls,
                            std::optional<long> tau = std::nullopt);

    bool is_unknot() const { return kind == KKind::Unknot; }
    std::string str() const;
};

// Resolves K(name) references; see knot_table.hpp for the CSV-backed one.
class KnotResolver {
  public:
    virtual ~KnotResolver() = default;
    virtual KnotExpr resolve(const std::string& name) const = 0;
};

// Grammar: expr := "U" | "T(a,b)" | "C(p,q; " expr ")" | "K(name)".
KnotExpr parse_knot_expr(const std::string& text, const KnotResolver* resolver = nullptr);

// C(p,q; U) is a torus knot (or the unknot when |p| = 1); rewrite the root
// before classification.
KnotExpr reroot_unknot_cable(const KnotExpr& k);

}  // namespace ks
