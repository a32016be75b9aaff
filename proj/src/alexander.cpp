#include "alexander.hpp"

#include <numeric>
#include <vector>

#include "errors.hpp"

namespace ks {

namespace {

// Dense integer polynomials for the elimination; index = exponent.
using Poly = std::vector<Int>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.empty(); }

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Exact division; the caller guarantees divisibility (Bareiss invariant).
Poly divexact(const Poly& a, const Poly& b) {
    if (is_zero(a)) return {};
    if (is_zero(b)) throw input_error("polynomial division by zero");
    Poly rem = a;
    Poly quot(a.size() - b.size() + 1, Int(0));
    for (long i = static_cast<long>(rem.size()) - static_cast<long>(b.size()); i >= 0; --i) {
        Int lead = rem[i + b.size() - 1];
        if (lead == 0) continue;
        if (lead % b.back() != 0) throw input_error("inexact polynomial division");
        Int q = lead / b.back();
        quot[i] = q;
        for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= q * b[j];
    }
    trim(rem);
    if (!is_zero(rem)) throw input_error("inexact polynomial division");
    trim(quot);
    return quot;
}

// Determinant of a square polynomial matrix by Bareiss elimination.
Poly determinant(std::vector<std::vector<Poly>> m) {
    const size_t n = m.size();
    if (n == 0) return {Int(1)};
    int sign = 1;
    Poly prev = {Int(1)};
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return {};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    if (sign < 0) det = sub({}, det);
    return det;
}

Laurent poly_to_laurent(const Poly& p) {
    Laurent f;
    for (size_t i = 0; i < p.size(); ++i) f.add_term(static_cast<long>(i), p[i]);
    return f;
}

}  // namespace

Laurent alexander_fox(const OrientedPD& d) {
    const int c = d.crossing_count();
    if (c == 0) return Laurent::one();

    // Wirtinger generators are the over-strands: arcs merged through the
    // over-line of each crossing.
    std::vector<int> strand(d.arc_count());
    std::iota(strand.begin(), strand.end(), 0);
    auto find = [&](int x) {
        while (strand[x] != x) {
            strand[x] = strand[strand[x]];
            x = strand[x];
        }
        return x;
    };
    for (const auto& t : d.tuples()) strand[find(t[1])] = find(t[3]);
    std::vector<int> gen_id(d.arc_count(), -1);
    int gens = 0;
    for (int i = 0; i < d.arc_count(); ++i)
        if (find(i) == i) gen_id[i] = gens++;
    auto gen = [&](int arc) { return gen_id[find(arc)]; };

    // One relation per crossing.  Positive: x_out = x_o x_in x_o^-1 gives
    // Fox row (1-t, t, -1); the negative row is cleared of t^-1 by a unit.
    std::vector<std::vector<Poly>> m(c, std::vector<Poly>(gens));
    auto add = [&](Poly& dst, const Poly& v) { dst = sub(dst, sub({}, v)); };
    for (int i = 0; i < c; ++i) {
        const auto& t = d.tuples()[i];
        int o = gen(t[1]);
        int uin = gen(t[0]);
        int uout = gen(t[2]);
        if (d.signs()[i] > 0) {
            add(m[i][o], {Int(1), Int(-1)});
            add(m[i][uin], {Int(0), Int(1)});
            add(m[i][uout], {Int(-1)});
        } else {
            add(m[i][o], {Int(-1), Int(1)});
            add(m[i][uin], {Int(1)});
            add(m[i][uout], {Int(0), Int(-1)});
        }
    }

    // Delete the last column and take the minor determinant.
    std::vector<std::vector<Poly>> minor(c - 1, std::vector<Poly>(gens > 1 ? gens - 1 : 0));
    for (int i = 0; i + 1 < c; ++i)
        for (int j = 0; j + 1 < gens; ++j) minor[i][j] = m[i][j];
    // Rows are dependent, so dropping one loses nothing; but use c-1 of
    // the c rows and gens-1 columns (gens == c for a knot diagram).
    Poly det = determinant(std::move(minor));
    if (is_zero(det)) throw input_error("Alexander determinant vanished; not a knot diagram");
    return normalize_alexander(poly_to_laurent(det));
}

Laurent alexander_torus(long a, long b) {
    a = std::abs(a);
    b = std::abs(b);
    if (a <= 1 || b <= 1) return Laurent::one();
    auto cyc = [](long k) {
        Poly p(k + 1, Int(0));
        p[0] = -1;
        p[k] = 1;
        return p;
    };
    Poly num = mul(cyc(a * b), cyc(1));
    Poly q = divexact(num, cyc(a));
    q = divexact(q, cyc(b));
    return normalize_alexander(poly_to_laurent(q));
}

}  // namespace ks
