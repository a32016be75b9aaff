#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "slope.hpp"

namespace ks {

enum class MKind {
    Lens,          // L(p,q), 0 <= q < p after normalization
    ConnectedSum,  // summand multiset
    SFS,           // Seifert piece: singular multiplicities >= 2, boundary count
    TorusExterior,  // exterior of the (a,b) torus knot (a Seifert atom)
    CableSpace,    // complement of a (p,q)-curve in a solid torus
    ExteriorAtom,  // exterior of a named leaf knot
    SurgeryAtom,   // surgery on a named knot at a slope
    Graph          // graph manifold: flattened piece multiset
};

// Symbolic descriptor for the closed manifolds and JSJ-pieces produced by
// the cable-surgery classifier.  Gluing maps are not modeled; a graph
// manifold is its piece multiset plus a JSJ-torus count annotation.
struct Manifold {
    MKind kind;
    Int p, q;                       // Lens / CableSpace / TorusExterior params
    std::vector<Int> multiplicities;  // SFS, kept sorted
    int boundary = 0;               // SFS boundary component count
    std::string knot;               // ExteriorAtom / SurgeryAtom
    std::optional<Slope> slope;     // SurgeryAtom
    bool atoroidal = false;         // SurgeryAtom: filling known atoroidal
    std::vector<Manifold> pieces;   // ConnectedSum / Graph
    std::optional<int> jsj_tori;    // annotation on closed descriptors

    static Manifold lens(const Int& p, const Int& q);
    static Manifold sfs(std::vector<Int> mult, int boundary);
    static Manifold torus_exterior(long a, long b);
    static Manifold cable_space(long p, long q);
    static Manifold exterior_atom(std::string knot);
    static Manifold surgery_atom(std::string knot, const Slope& s, bool atoroidal);
    static Manifold connected_sum(std::vector<Manifold> summands);
    static Manifold graph(std::vector<Manifold> pieces, int jsj_tori);

    // Stable canonical key; equal keys mean equal descriptors.
    std::string key() const;
    std::string json() const;
    bool operator==(const Manifold& o) const { return key() == o.key(); }
};

enum class Reason { Reducibility, JSJTorusCount, FiberMultiplicities, LensInvariants, AtomMismatch };

struct DistinguishVerdict {
    bool distinct = false;
    std::optional<Reason> reason;  // present exactly when distinct
    std::string detail;
};

const char* reason_name(Reason r);

// Oriented homeomorphism test for lens spaces: p1 = p2 and
// q1 = q2 or q1*q2 = 1 (mod p).
bool lens_oriented_homeo(const Manifold& l1, const Manifold& l2);

// Sound, possibly incomplete separation by reducibility class, JSJ-torus
// count, Seifert multiplicity multisets, lens invariants or atom identity.
DistinguishVerdict distinguish(const Manifold& d1, const Manifold& d2);

// JSJ-torus count recorded by the classifier.  Throws input_error on
// descriptors lacking the annotation.
int jsj_torus_count(const Manifold& d);

}  // namespace ks
