#include "jones.hpp"

#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"

namespace ks {

namespace {

Laurent loop_value() {
    // delta = -A^2 - A^-2
    Laurent d;
    d.add_term(2, -1);
    d.add_term(-2, -1);
    return d;
}

// Jones from the bracket: V = (-A^3)^(-w) * <D>, then t = A^-4.
Laurent bracket_to_jones(const Laurent& bracket, int writhe) {
    Laurent v = bracket;
    Laurent corr = Laurent::term((writhe % 2 == 0) ? 1 : -1, -3 * writhe);
    v = v * corr;
    Laurent out;
    for (const auto& [e, c] : v.coeffs()) {
        if (e % 4 != 0) throw input_error("bracket has non-integral Jones exponent");
        out.add_term(-e / 4, c);
    }
    return out;
}

}  // namespace

Laurent kauffman_bracket(const OrientedPD& d) {
    const int c = d.crossing_count();
    if (c == 0) return Laurent::one();
    const int m = d.arc_count();
    const auto& tuples = d.tuples();

    // tally[#B-smoothings][#loops]
    std::vector<std::vector<std::uint64_t>> tally(c + 1, std::vector<std::uint64_t>(c + 2, 0));
    std::vector<int> parent(m);
    for (std::uint64_t state = 0; state < (std::uint64_t(1) << c); ++state) {
        for (int i = 0; i < m; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        int bits = 0;
        for (int i = 0; i < c; ++i) {
            const auto& t = tuples[i];
            int p, q, r, s;
            if (state >> i & 1) {
                // B-smoothing: (a,d), (b,c)
                ++bits;
                p = t[0]; q = t[3]; r = t[1]; s = t[2];
            } else {
                // A-smoothing: (a,b), (c,d)
                p = t[0]; q = t[1]; r = t[2]; s = t[3];
            }
            parent[find(p)] = find(q);
            parent[find(r)] = find(s);
        }
        int loops = 0;
        for (int i = 0; i < m; ++i)
            if (find(i) == i) ++loops;
        ++tally[bits][loops];
    }

    Laurent delta = loop_value();
    std::vector<Laurent> delta_pow(c + 2);
    delta_pow[0] = Laurent::one();
    for (int i = 1; i <= c + 1; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

    Laurent bracket;
    for (int b = 0; b <= c; ++b)
        for (int l = 1; l <= c + 1; ++l)
            if (tally[b][l])
                bracket += Laurent::term(Int(tally[b][l]), (c - b) - b) * delta_pow[l - 1];
    return bracket;
}

Laurent jones(const OrientedPD& d, int max_crossings) {
    if (d.crossing_count() > max_crossings)
        throw resource_limit_error("state sum cap exceeded: " +
                                   std::to_string(d.crossing_count()) + " crossings > cap " +
                                   std::to_string(max_crossings));
    return bracket_to_jones(kauffman_bracket(d), d.writhe());
}

namespace {

// Planar matchings of 2n points: 0..n-1 on the bottom, n..2n-1 on the top.
using Matching = std::vector<int>;

Matching tl_identity(int n) {
    Matching m(2 * n);
    for (int i = 0; i < n; ++i) {
        m[i] = n + i;
        m[n + i] = i;
    }
    return m;
}

Matching tl_cupcap(int n, int i) {
    Matching m = tl_identity(n);
    m[i] = i + 1;
    m[i + 1] = i;
    m[n + i] = n + i + 1;
    m[n + i + 1] = n + i;
    return m;
}

// Stacks `top` above `bot`; returns the resulting matching and the number of
// closed loops created at the interface.  The interface glues bot's top
// point n+k to top's bottom point k.
std::pair<Matching, int> tl_compose(const Matching& bot, const Matching& top, int n) {
    Matching out(2 * n, -1);
    std::vector<bool> seen_iface(n, false);
    // Walks from an outer point to its outer partner.  side 0 = inside bot,
    // side 1 = inside top; returns the outer index (bottom < n, top >= n).
    auto walk = [&](int side, int pt) {
        while (true) {
            if (side == 0) {
                int q = bot[pt];
                if (q < n) return q;
                seen_iface[q - n] = true;
                side = 1;
                pt = q - n;
            } else {
                int q = top[pt];
                if (q >= n) return q;
                seen_iface[q] = true;
                side = 0;
                pt = n + q;
            }
        }
    };
    for (int i = 0; i < n; ++i) {
        if (out[i] != -1) continue;
        int j = walk(0, i);
        out[i] = j;
        out[j] = i;
    }
    for (int i = n; i < 2 * n; ++i) {
        if (out[i] != -1) continue;
        int j = walk(1, i);
        out[i] = j;
        out[j] = i;
    }
    // Interface points untouched by through-paths lie on closed loops.
    int loops = 0;
    std::vector<bool> vis(n, false);
    for (int k = 0; k < n; ++k) {
        if (seen_iface[k] || vis[k]) continue;
        ++loops;
        int cur = k;
        do {
            vis[cur] = true;
            int k1 = bot[n + cur] - n;  // partner within bot, also interface
            vis[k1] = true;
            cur = top[k1];  // partner within top, back to an interface point
        } while (cur != k);
    }
    return {out, loops};
}

int closure_loops(const Matching& m, int n) {
    std::vector<bool> seen(2 * n, false);
    int loops = 0;
    for (int i = 0; i < 2 * n; ++i) {
        if (seen[i]) continue;
        ++loops;
        int pt = i;
        while (!seen[pt]) {
            seen[pt] = true;
            int q = m[pt];  // matching edge
            seen[q] = true;
            pt = q < n ? q + n : q - n;  // closure edge bottom<->top
        }
    }
    return loops;
}

}  // namespace

Laurent jones_braid(const BraidWord& b, int max_crossings) {
    validate_braid_knot(b);
    if (static_cast<int>(b.letters.size()) > max_crossings)
        throw resource_limit_error("crossing cap exceeded: " +
                                   std::to_string(b.letters.size()) + " crossings > cap " +
                                   std::to_string(max_crossings));
    const int n = b.strands;
    Laurent delta = loop_value();

    std::map<Matching, Laurent> elem;
    elem[tl_identity(n)] = Laurent::one();
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        int eps = l > 0 ? 1 : -1;
        Matching e_i = tl_cupcap(n, i);
        std::map<Matching, Laurent> next;
        for (const auto& [d, coef] : elem) {
            // sigma^eps = A^eps * 1 + A^-eps * e_i
            {
                auto& slot = next[d];
                slot += coef * Laurent::term(1, eps);
            }
            auto [d2, loops] = tl_compose(d, e_i, n);
            Laurent c2 = coef * Laurent::term(1, -eps);
            for (int k = 0; k < loops; ++k) c2 = c2 * delta;
            next[d2] += c2;
        }
        elem.clear();
        for (auto& [d, coef] : next)
            if (!coef.is_zero()) elem.emplace(d, std::move(coef));
    }

    Laurent bracket;
    for (const auto& [d, coef] : elem) {
        int loops = closure_loops(d, n);
        Laurent c = coef;
        for (int k = 0; k < loops - 1; ++k) c = c * delta;
        bracket += c;
    }
    return bracket_to_jones(bracket, braid_writhe(b));
}

}  // namespace ks
