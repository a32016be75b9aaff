// Independent reference implementations used only by tests.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"

namespace oracle {

// Kauffman bracket by brute-force state enumeration, written independently
// of the production implementation: every smoothed state forms a multigraph
// on arc labels (one pairing edge per smoothing strand), each arc has degree
// exactly two, and the loop count is the number of connected components,
// found here by depth-first search.
inline ks::Laurent bracket(const ks::PDCode& pd) {
    const int c = static_cast<int>(pd.crossings.size());
    const ks::Laurent delta =
        ks::Laurent::term(ks::Int(-1), 2) + ks::Laurent::term(ks::Int(-1), -2);
    ks::Laurent total;
    for (long mask = 0; mask < (1L << c); ++mask) {
        std::map<int, std::vector<int>> adj;
        auto join = [&](int x, int y) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        };
        int num_b = 0;
        for (int i = 0; i < c; ++i) {
            const auto& t = pd.crossings[i];
            if (mask >> i & 1) {
                ++num_b;  // B-smoothing joins positions (0,3) and (1,2)
                join(t[0], t[3]);
                join(t[1], t[2]);
            } else {  // A-smoothing joins positions (0,1) and (2,3)
                join(t[0], t[1]);
                join(t[2], t[3]);
            }
        }
        int loops = 0;
        std::map<int, bool> seen;
        for (const auto& [v, _] : adj) {
            if (seen[v]) continue;
            ++loops;
            std::vector<int> stack{v};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                if (seen[u]) continue;
                seen[u] = true;
                for (int w : adj[u]) stack.push_back(w);
            }
        }
        // contribution A^(#A - #B) * delta^(loops - 1)
        ks::Laurent contrib = ks::Laurent::term(ks::Int(1), (c - num_b) - num_b);
        for (int i = 1; i < loops; ++i) contrib = contrib * delta;
        total = total + contrib;
    }
    return total;
}

// Writhe-corrected bracket converted to t = A^-4 (V of the unknot is 1).
inline ks::Laurent jones_from_bracket(const ks::Laurent& br, int writhe) {
    ks::Laurent f = br * ks::Laurent::term(ks::Int(writhe % 2 == 0 ? 1 : -1), -3 * writhe);
    ks::Laurent out;
    for (const auto& [e, coef] : f.coeffs()) {
        if (e % 4 != 0) throw std::runtime_error("oracle: exponent not divisible by 4");
        out.add_term(-e / 4, coef);
    }
    return out;
}

inline ks::Laurent jones(const ks::OrientedPD& d) {
    return jones_from_bracket(bracket(d.pd()), d.writhe());
}

}  // namespace oracle
