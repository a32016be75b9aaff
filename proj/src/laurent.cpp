#include "laurent.hpp"

#include <cassert>

#include "errors.hpp"

namespace ks {

Laurent Laurent::constant(Int c) { return term(std::move(c), 0); }

Laurent Laurent::term(Int c, long e) {
    Laurent f;
    if (c != 0) f.coeffs_[e] = std::move(c);
    return f;
}

Int Laurent::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
}

long Laurent::min_exp() const {
    assert(!coeffs_.empty());
    return coeffs_.begin()->first;
}

long Laurent::max_exp() const {
    assert(!coeffs_.empty());
    return coeffs_.rbegin()->first;
}

void Laurent::add_term(long e, const Int& c) {
    if (c == 0) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Laurent Laurent::substitute_power(long q) const {
    if (q == 0) throw input_error("substitute_power: exponent must be nonzero");
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * q] = c;
    return r;
}

Laurent Laurent::derivative() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.add_term(e - 1, Int(e) * c);
    return r;
}

Int Laurent::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

Laurent Laurent::reciprocal_arg() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

Laurent Laurent::shifted(long k) const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

std::string Laurent::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Int c = it->second;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        Int a = abs_int(c);
        long e = it->first;
        if (e == 0) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
        first = false;
    }
    return out;
}

Laurent normalize_alexander(const Laurent& f) {
    if (f.is_zero()) throw input_error("normalize_alexander: zero polynomial");
    long lo = f.min_exp();
    long hi = f.max_exp();
    if ((lo + hi) % 2 != 0)
        throw input_error("normalize_alexander: exponent span has no symmetric center");
    Laurent g = f.shifted(-(lo + hi) / 2);
    if (g != g.reciprocal_arg())
        throw input_error("normalize_alexander: not symmetric up to units");
    Int v = g.eval_at_one();
    if (v == 1) return g;
    if (v == -1) return -g;
    throw input_error("normalize_alexander: value at 1 is not a unit");
}

Int derivative_at_one(const Laurent& f, int k) {
    Laurent g = f;
    for (int i = 0; i < k; ++i) g = g.derivative();
    return g.eval_at_one();
}

}  // namespace ks
