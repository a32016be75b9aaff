#include "knot_expr.hpp"

#include <cctype>
#include <numeric>

#include "errors.hpp"

namespace ks {

KnotExpr KnotExpr::unknot() { return KnotExpr{}; }

KnotExpr KnotExpr::torus(long a, long b) {
    if (std::labs(a) < 2 || std::labs(b) < 2)
        throw input_error("torus knot parameters must have absolute value >= 2 (unit gives the unknot)");
    if (std::gcd(std::labs(a), std::labs(b)) != 1)
        throw input_error("torus knot parameters must be coprime");
    KnotExpr k;
    k.kind = KKind::Torus;
    k.a = a;
    k.b = b;
    return k;
}

KnotExpr KnotExpr::cable(long p, long q, KnotExpr companion) {
    if (q <= -2) {
        p = -p;
        q = -q;
    }
    if (q < 2) throw input_error("cable winding number must satisfy |q| >= 2");
    if (std::gcd(std::labs(p), q) != 1) throw input_error("cable parameters must be coprime");
    KnotExpr k;
    k.kind = KKind::Cable;
    k.p = p;
    k.q = q;
    k.companion = std::make_shared<KnotExpr>(std::move(companion));
    return k;
}

KnotExpr KnotExpr::leaf_braid(std::string name, BraidWord b, LeafClass cls, std::optional<long> tau) {
    validate_braid_knot(b);
    KnotExpr k;
    k.kind = KKind::Leaf;
    k.name = std::move(name);
    k.source = LeafSource::Braid;
    k.braid = std::move(b);
    k.declared = cls;
    k.tau = tau;
    return k;
}

KnotExpr KnotExpr::leaf_pd(std::string name, PDCode pd, LeafClass cls, std::optional<long> tau) {
    OrientedPD check(pd);  // validates
    KnotExpr k;
    k.kind = KKind::Leaf;
    k.name = std::move(name);
    k.source = LeafSource::PD;
    k.pd = std::move(pd);
    k.declared = cls;
    k.tau = tau;
    return k;
}

std::string KnotExpr::str() const {
    switch (kind) {
        case KKind::Unknot: return "U";
        case KKind::Torus: return "T(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case KKind::Cable:
            return "C(" + std::to_string(p) + "," + std::to_string(q) + "; " + companion->str() + ")";
        case KKind::Leaf: return "K(" + name + ")";
    }
    return "?";
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long read_long(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw input_error("expected integer in knot expression");
    return std::stol(s.substr(start, i - start));
}

void expect_ch(const std::string& s, size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw input_error(std::string("expected '") + c + "' in knot expression");
    ++i;
}

KnotExpr parse_expr(const std::string& s, size_t& i, const KnotResolver* resolver, int depth) {
    if (depth > 64) throw input_error("knot expression too deeply nested");
    skip_ws(s, i);
    if (i >= s.size()) throw input_error("empty knot expression");
    char c = s[i];
    if (c == 'U') {
        ++i;
        return KnotExpr::unknot();
    }
    if (c == 'T') {
        ++i;
        expect_ch(s, i, '(');
        long a = read_long(s, i);
        expect_ch(s, i, ',');
        long b = read_long(s, i);
        expect_ch(s, i, ')');
        return KnotExpr::torus(a, b);
    }
    if (c == 'C') {
        ++i;
        expect_ch(s, i, '(');
        long p = read_long(s, i);
        expect_ch(s, i, ',');
        long q = read_long(s, i);
        expect_ch(s, i, ';');
        KnotExpr companion = parse_expr(s, i, resolver, depth + 1);
        expect_ch(s, i, ')');
        return KnotExpr::cable(p, q, std::move(companion));
    }
    if (c == 'K') {
        ++i;
        expect_ch(s, i, '(');
        skip_ws(s, i);
        size_t start = i;
        while (i < s.size() && s[i] != ')' && s[i] != ',') ++i;
        std::string name = s.substr(start, i - start);
        while (!name.empty() && isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
        expect_ch(s, i, ')');
        if (name.empty()) throw input_error("empty knot name in K(...)");
        if (!resolver) throw input_error("K(" + name + "): no knot table loaded");
        return resolver->resolve(name);
    }
    throw input_error("cannot parse knot expression near '" + s.substr(i) + "'");
}

}  // namespace

KnotExpr parse_knot_expr(const std::string& text, const KnotResolver* resolver) {
    size_t i = 0;
    KnotExpr k = parse_expr(text, i, resolver, 0);
    skip_ws(text, i);
    if (i != text.size()) throw input_error("trailing characters after knot expression");
    return k;
}

KnotExpr reroot_unknot_cable(const KnotExpr& k) {
    if (k.kind != KKind::Cable) return k;
    KnotExpr comp = reroot_unknot_cable(*k.companion);
    if (comp.is_unknot()) {
        if (std::labs(k.p) < 2) return KnotExpr::unknot();
        return KnotExpr::torus(k.p, k.q);
    }
    if (comp.kind == k.companion->kind) {
        KnotExpr out = k;
        out.companion = std::make_shared<KnotExpr>(std::move(comp));
        return out;
    }
    KnotExpr out = k;
    out.companion = std::make_shared<KnotExpr>(std::move(comp));
    return out;
}

}  // namespace ks
