#include "manifold.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace ks {

Manifold Manifold::lens(const Int& p, const Int& q) {
    Manifold m{MKind::Lens};
    m.p = abs_int(p);
    if (m.p < 1) throw input_error("lens space needs p >= 1");
    m.q = ((q % m.p) + m.p) % m.p;
    return m;
}

Manifold Manifold::sfs(std::vector<Int> mult, int boundary) {
    Manifold m{MKind::SFS};
    for (auto& x : mult) {
        x = abs_int(x);
        if (x < 2) throw input_error("SFS singular multiplicities must be >= 2");
    }
    std::sort(mult.begin(), mult.end());
    m.multiplicities = std::move(mult);
    m.boundary = boundary;
    return m;
}

Manifold Manifold::torus_exterior(long a, long b) {
    Manifold m{MKind::TorusExterior};
    long x = std::min(std::labs(a), std::labs(b));
    long y = std::max(std::labs(a), std::labs(b));
    m.p = x;
    m.q = y;
    return m;
}

Manifold Manifold::cable_space(long p, long q) {
    Manifold m{MKind::CableSpace};
    m.p = p;
    m.q = q;
    return m;
}

Manifold Manifold::exterior_atom(std::string knot) {
    Manifold m{MKind::ExteriorAtom};
    m.knot = std::move(knot);
    return m;
}

Manifold Manifold::surgery_atom(std::string knot, const Slope& s, bool atoroidal) {
    Manifold m{MKind::SurgeryAtom};
    m.knot = std::move(knot);
    m.slope = s;
    m.atoroidal = atoroidal;
    return m;
}

Manifold Manifold::connected_sum(std::vector<Manifold> summands) {
    Manifold m{MKind::ConnectedSum};
    m.pieces = std::move(summands);
    std::sort(m.pieces.begin(), m.pieces.end(),
              [](const Manifold& a, const Manifold& b) { return a.key() < b.key(); });
    return m;
}

Manifold Manifold::graph(std::vector<Manifold> pieces, int jsj_tori) {
    Manifold m{MKind::Graph};
    // flatten nested graph pieces
    for (auto& pc : pieces) {
        if (pc.kind == MKind::Graph)
            for (auto& sub : pc.pieces) m.pieces.push_back(sub);
        else
            m.pieces.push_back(pc);
    }
    std::sort(m.pieces.begin(), m.pieces.end(),
              [](const Manifold& a, const Manifold& b) { return a.key() < b.key(); });
    m.jsj_tori = jsj_tori;
    return m;
}

namespace {

nlohmann::json to_json(const Manifold& m) {
    nlohmann::json j;
    switch (m.kind) {
        case MKind::Lens:
            j["kind"] = "lens";
            j["p"] = m.p.str();
            j["q"] = m.q.str();
            break;
        case MKind::ConnectedSum: {
            j["kind"] = "connected_sum";
            j["summands"] = nlohmann::json::array();
            for (const auto& pc : m.pieces) j["summands"].push_back(to_json(pc));
            break;
        }
        case MKind::SFS: {
            j["kind"] = "sfs";
            j["multiplicities"] = nlohmann::json::array();
            for (const auto& x : m.multiplicities) j["multiplicities"].push_back(x.str());
            j["boundary"] = m.boundary;
            break;
        }
        case MKind::TorusExterior:
            j["kind"] = "torus_exterior";
            j["a"] = m.p.str();
            j["b"] = m.q.str();
            break;
        case MKind::CableSpace:
            j["kind"] = "cable_space";
            j["p"] = m.p.str();
            j["q"] = m.q.str();
            break;
        case MKind::ExteriorAtom:
            j["kind"] = "exterior";
            j["knot"] = m.knot;
            break;
        case MKind::SurgeryAtom:
            j["kind"] = "surgery";
            j["knot"] = m.knot;
            j["slope"] = m.slope ? m.slope->str() : "";
            j["atoroidal"] = m.atoroidal;
            break;
        case MKind::Graph: {
            j["kind"] = "graph";
            j["pieces"] = nlohmann::json::array();
            for (const auto& pc : m.pieces) j["pieces"].push_back(to_json(pc));
            break;
        }
    }
    if (m.jsj_tori) j["jsj_tori"] = *m.jsj_tori;
    return j;
}

}  // namespace

std::string Manifold::json() const { return to_json(*this).dump(); }

std::string Manifold::key() const {
    // The JSON dump is canonical: multisets are stored sorted.
    return to_json(*this).dump();
}

const char* reason_name(Reason r) {
    switch (r) {
        case Reason::Reducibility: return "Reducibility";
        case Reason::JSJTorusCount: return "JSJTorusCount";
        case Reason::FiberMultiplicities: return "FiberMultiplicities";
        case Reason::LensInvariants: return "LensInvariants";
        case Reason::AtomMismatch: return "AtomMismatch";
    }
    return "?";
}

bool lens_oriented_homeo(const Manifold& l1, const Manifold& l2) {
    if (l1.kind != MKind::Lens || l2.kind != MKind::Lens)
        throw input_error("lens_oriented_homeo expects lens descriptors");
    if (l1.p != l2.p) return false;
    const Int& p = l1.p;
    if (p == 1) return true;
    if ((l1.q - l2.q) % p == 0) return true;
    return (l1.q * l2.q - 1) % p == 0;
}

namespace {

// Identity of a piece with surgery slopes erased; surgeries on the same
// knot at different slopes must never be declared distinct.
std::string atom_identity(const Manifold& m) {
    if (m.kind == MKind::SurgeryAtom) return "surgery:" + m.knot;
    return m.key();
}

std::vector<Manifold> piece_list(const Manifold& m) {
    if (m.kind == MKind::Graph || m.kind == MKind::ConnectedSum) return m.pieces;
    return {m};
}

bool multiset_eq(std::vector<std::string> a, std::vector<std::string> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

DistinguishVerdict distinguish(const Manifold& d1, const Manifold& d2) {
    DistinguishVerdict v;
    if (d1.key() == d2.key()) return v;

    const bool red1 = d1.kind == MKind::ConnectedSum;
    const bool red2 = d2.kind == MKind::ConnectedSum;
    if (red1 != red2) {
        v.distinct = true;
        v.reason = Reason::Reducibility;
        v.detail = "one manifold is a non-trivial connected sum, the other is irreducible";
        return v;
    }

    if (d1.kind == MKind::Lens && d2.kind == MKind::Lens) {
        if (!lens_oriented_homeo(d1, d2)) {
            v.distinct = true;
            v.reason = Reason::LensInvariants;
            v.detail = "lens invariants differ";
        }
        return v;
    }

    if (red1 && red2) {
        // Compare lens summands and slope-erased atoms.
        std::vector<Manifold> lens1, lens2;
        std::vector<std::string> rest1, rest2;
        for (const auto& pc : d1.pieces)
            (pc.kind == MKind::Lens ? (void)lens1.push_back(pc) : (void)rest1.push_back(atom_identity(pc)));
        for (const auto& pc : d2.pieces)
            (pc.kind == MKind::Lens ? (void)lens2.push_back(pc) : (void)rest2.push_back(atom_identity(pc)));
        if (lens1.size() != lens2.size() ||
            !std::is_permutation(lens1.begin(), lens1.end(), lens2.begin(), lens_oriented_homeo)) {
            v.distinct = true;
            v.reason = Reason::LensInvariants;
            v.detail = "lens summands differ";
            return v;
        }
        if (!multiset_eq(rest1, rest2)) {
            v.distinct = true;
            v.reason = Reason::AtomMismatch;
            v.detail = "connected-sum summands differ";
        }
        return v;
    }

    // Both irreducible.  JSJ-torus counts separate when both are annotated.
    if (d1.jsj_tori && d2.jsj_tori && *d1.jsj_tori != *d2.jsj_tori) {
        v.distinct = true;
        v.reason = Reason::JSJTorusCount;
        v.detail = "JSJ-torus counts " + std::to_string(*d1.jsj_tori) + " vs " +
                   std::to_string(*d2.jsj_tori);
        return v;
    }

    // Compare JSJ piece multisets.
    auto p1 = piece_list(d1);
    auto p2 = piece_list(d2);
    std::vector<std::string> sfs1, sfs2, atoms1, atoms2;
    for (const auto& pc : p1)
        (pc.kind == MKind::SFS ? (void)sfs1.push_back(pc.key()) : (void)atoms1.push_back(atom_identity(pc)));
    for (const auto& pc : p2)
        (pc.kind == MKind::SFS ? (void)sfs2.push_back(pc.key()) : (void)atoms2.push_back(atom_identity(pc)));
    if (!multiset_eq(sfs1, sfs2)) {
        v.distinct = true;
        v.reason = Reason::FiberMultiplicities;
        v.detail = "Seifert singular-fiber multiplicity multisets differ";
        return v;
    }
    if (!multiset_eq(atoms1, atoms2)) {
        v.distinct = true;
        v.reason = Reason::AtomMismatch;
        v.detail = "JSJ atom pieces differ";
        return v;
    }
    return v;
}

int jsj_torus_count(const Manifold& d) {
    if (!d.jsj_tori) throw input_error("descriptor lacks JSJ annotations");
    return *d.jsj_tori;
}

}  // namespace ks
