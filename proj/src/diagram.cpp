#include "diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "errors.hpp"

namespace ks {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int classes() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++n;
        return n;
    }
};

}  // namespace

OrientedPD::OrientedPD(const PDCode& pd) : pd_(pd) {
    const int c = static_cast<int>(pd.crossings.size());
    if (c == 0) {
        arc_count_ = 0;
        return;
    }

    // Relabel arcs to 0..2c-1 and record the two occurrences of each arc.
    std::map<int, int> label_map;
    std::map<int, std::vector<std::pair<int, int>>> occ;  // arc -> (crossing, pos)
    tuples_.resize(c);
    for (int i = 0; i < c; ++i) {
        for (int p = 0; p < 4; ++p) {
            int raw = pd.crossings[i][p];
            if (raw <= 0) throw input_error("PD arc labels must be positive");
            auto [it, inserted] = label_map.try_emplace(raw, static_cast<int>(label_map.size()));
            tuples_[i][p] = it->second;
            occ[it->second].push_back({i, p});
        }
    }
    arc_count_ = static_cast<int>(label_map.size());
    if (arc_count_ != 2 * c)
        throw input_error("PD code must have exactly 2c distinct arcs");
    for (auto& [arc, os] : occ)
        if (os.size() != 2)
            throw input_error("every PD arc label must appear exactly twice");

    // Single component: under-strand joins positions 0-2, over-strand 1-3.
    UnionFind comp(arc_count_);
    for (int i = 0; i < c; ++i) {
        comp.unite(tuples_[i][0], tuples_[i][2]);
        comp.unite(tuples_[i][1], tuples_[i][3]);
    }
    if (comp.classes() != 1)
        throw input_error("diagram has more than one component");

    // Orientation inference.  Position 0 is incoming (under), position 2
    // outgoing.  Per crossing, a boolean says whether position 1 is the
    // incoming over-arc.  Each arc must be incoming at exactly one of its
    // two occurrences; propagate from the fixed under positions.
    //
    // incoming(crossing, pos): pos0 -> 1, pos2 -> 0, pos1 -> b, pos3 -> !b.
    std::vector<std::optional<bool>> over_in_at_1(c);
    bool changed = true;
    auto incoming = [&](int cr, int pos) -> std::optional<bool> {
        if (pos == 0) return true;
        if (pos == 2) return false;
        if (!over_in_at_1[cr]) return std::nullopt;
        return pos == 1 ? *over_in_at_1[cr] : !*over_in_at_1[cr];
    };
    while (changed) {
        changed = false;
        for (auto& [arc, os] : occ) {
            auto [c1, p1] = os[0];
            auto [c2, p2] = os[1];
            auto i1 = incoming(c1, p1);
            auto i2 = incoming(c2, p2);
            if (i1 && i2) {
                if (*i1 == *i2)
                    throw input_error("PD code admits no consistent orientation");
            } else if (i1 && !i2) {
                over_in_at_1[c2] = (p2 == 1) ? !*i1 : *i1;
                changed = true;
            } else if (i2 && !i1) {
                over_in_at_1[c1] = (p1 == 1) ? !*i2 : *i2;
                changed = true;
            }
        }
    }
    for (int i = 0; i < c; ++i)
        if (!over_in_at_1[i]) over_in_at_1[i] = true;

    // With the tuple counterclockwise from the incoming under-arc, the
    // crossing is positive exactly when the over-strand enters at position 3.
    signs_.resize(c);
    for (int i = 0; i < c; ++i) signs_[i] = *over_in_at_1[i] ? -1 : 1;
}

int OrientedPD::writhe() const {
    int w = 0;
    for (int s : signs_) w += s;
    return w;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long parse_int(const std::string& s, size_t& i, const char* what) {
    skip_ws(s, i);
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !isdigit(static_cast<unsigned char>(s[start]))))
        throw input_error(std::string("expected integer in ") + what);
    return std::stol(s.substr(start, i - start));
}

void expect(const std::string& s, size_t& i, char c, const char* what) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw input_error(std::string("expected '") + c + "' in " + what);
    ++i;
}

}  // namespace

PDCode parse_pd(const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    if (text.compare(i, 2, "PD") != 0) throw input_error("PD code must start with 'PD['");
    i += 2;
    expect(text, i, '[', "PD code");
    PDCode pd;
    skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
        ++i;
        return pd;
    }
    while (true) {
        skip_ws(text, i);
        if (i >= text.size() || text[i] != 'X')
            throw input_error("expected crossing 'X(a,b,c,d)' in PD code");
        ++i;
        expect(text, i, '(', "crossing");
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            long v = parse_int(text, i, "crossing");
            if (v <= 0) throw input_error("PD arc labels must be positive");
            t[k] = static_cast<int>(v);
            if (k < 3) expect(text, i, ',', "crossing");
        }
        expect(text, i, ')', "crossing");
        pd.crossings.push_back(t);
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        expect(text, i, ']', "PD code");
        break;
    }
    skip_ws(text, i);
    if (i != text.size()) throw input_error("trailing characters after PD code");
    return pd;
}

BraidWord parse_braid(const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    if (text.compare(i, 2, "BR") != 0) throw input_error("braid word must start with 'BR['");
    i += 2;
    expect(text, i, '[', "braid word");
    BraidWord b;
    long s = parse_int(text, i, "braid word");
    if (s < 1) throw input_error("braid must have at least one strand");
    b.strands = static_cast<int>(s);
    skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
        ++i;
        skip_ws(text, i);
        if (i != text.size()) throw input_error("trailing characters after braid word");
        return b;
    }
    expect(text, i, ';', "braid word");
    skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            long v = parse_int(text, i, "braid word");
            if (v == 0 || std::abs(v) >= b.strands)
                throw input_error("braid letter out of range");
            b.letters.push_back(static_cast<int>(v));
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            expect(text, i, ']', "braid word");
            break;
        }
    }
    skip_ws(text, i);
    if (i != text.size()) throw input_error("trailing characters after braid word");
    return b;
}

int closure_components(const BraidWord& b) {
    std::vector<int> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    std::vector<bool> seen(b.strands, false);
    int cycles = 0;
    for (int i = 0; i < b.strands; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return cycles;
}

void validate_braid_knot(const BraidWord& b) {
    for (int l : b.letters)
        if (l == 0 || std::abs(l) >= b.strands)
            throw input_error("braid letter out of range");
    if (closure_components(b) != 1)
        throw input_error("braid closure has more than one component");
}

int braid_writhe(const BraidWord& b) {
    int w = 0;
    for (int l : b.letters) w += l > 0 ? 1 : -1;
    return w;
}

BraidWord mirror(const BraidWord& b) {
    BraidWord m = b;
    for (int& l : m.letters) l = -l;
    return m;
}

PDCode braid_to_pd(const BraidWord& b) {
    // Strands run upward; sigma_i takes the strand at position i over the
    // strand at position i+1.
    std::vector<int> cur(b.strands);
    std::iota(cur.begin(), cur.end(), 1);
    int next = b.strands + 1;
    PDCode pd;
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        int el = cur[i], er = cur[i + 1];
        int nl = next++, nr = next++;
        if (l > 0) {
            // under-strand right-to-left: (BR, TR, TL, BL)
            pd.crossings.push_back({er, nr, nl, el});
        } else {
            // under-strand left-to-right: (BL, BR, TR, TL)
            pd.crossings.push_back({el, er, nr, nl});
        }
        cur[i] = nl;
        cur[i + 1] = nr;
    }
    // Close up: identify the final arc at each position with the initial one.
    std::map<int, int> rep;
    for (int j = 0; j < b.strands; ++j)
        if (cur[j] != j + 1) rep[cur[j]] = j + 1;
    for (auto& t : pd.crossings)
        for (int& a : t)
            if (auto it = rep.find(a); it != rep.end()) a = it->second;
    return pd;
}

BraidWord cable_braid(const BraidWord& b, long p, long q) {
    if (q < 2) throw input_error("cable_braid: q must be >= 2");
    if (std::gcd(std::abs(p), q) != 1) throw input_error("cable_braid: gcd(p,q) must be 1");
    validate_braid_knot(b);

    BraidWord out;
    out.strands = static_cast<int>(q) * b.strands;
    auto block = [&](int i, int eps) {
        // Bundle i crosses bundle i+1 wholesale; q*q crossings of sign eps.
        long a = static_cast<long>(i - 1) * q;
        std::vector<int> w;
        for (long row = 1; row <= q; ++row)
            for (long col = 1; col <= q; ++col)
                w.push_back(static_cast<int>(a + q - row + col));
        if (eps < 0) {
            std::reverse(w.begin(), w.end());
            for (int& x : w) x = -x;
        }
        return w;
    };
    for (int l : b.letters) {
        auto w = block(std::abs(l), l > 0 ? 1 : -1);
        out.letters.insert(out.letters.end(), w.begin(), w.end());
    }
    // Framing correction on the first bundle.
    long t = p - q * braid_writhe(b);
    for (long rep = 0; rep < std::abs(t); ++rep) {
        if (t > 0)
            for (long k = 1; k < q; ++k) out.letters.push_back(static_cast<int>(k));
        else
            for (long k = q - 1; k >= 1; --k) out.letters.push_back(static_cast<int>(-k));
    }
    return out;
}

std::string pd_to_string(const PDCode& pd) {
    std::ostringstream os;
    os << "PD[";
    for (size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& t = pd.crossings[i];
        if (i) os << ", ";
        os << "X(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")";
    }
    os << "]";
    return os.str();
}

std::string braid_to_string(const BraidWord& b) {
    std::ostringstream os;
    os << "BR[" << b.strands;
    if (!b.letters.empty()) {
        os << "; ";
        for (size_t i = 0; i < b.letters.size(); ++i) {
            if (i) os << ",";
            os << b.letters[i];
        }
    }
    os << "]";
    return os.str();
}

}  // namespace ks
