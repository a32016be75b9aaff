#include "slope.hpp"

#include "errors.hpp"

namespace ks {

Slope Slope::make(Int m, Int n) {
    if (m == 0 && n == 0) throw input_error("invalid slope 0/0");
    Int g = gcd_int(m, n);
    m /= g;
    n /= g;
    if (n < 0) {
        m = -m;
        n = -n;
    }
    if (n == 0 && m < 0) m = -m;  // the meridian is (1,0)
    return Slope(std::move(m), std::move(n));
}

Slope Slope::negated() const { return Slope::make(-m_, n_); }

Slope Slope::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "inf" || s == "infinity") return infinity();
    auto valid_int = [](const std::string& t) {
        size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto bar = s.find('/');
    std::string ms = bar == std::string::npos ? s : s.substr(0, bar);
    std::string ns = bar == std::string::npos ? "1" : s.substr(bar + 1);
    if (!valid_int(ms) || !valid_int(ns)) throw input_error("cannot parse slope '" + text + "'");
    try {
        return make(Int(ms), Int(ns));
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("cannot parse slope '" + text + "'");
    }
}

std::string Slope::str() const {
    if (is_infinity()) return "inf";
    return m_.str() + "/" + n_.str();
}

Int intersection_number(const Slope& r, const Slope& s) {
    return abs_int(r.m() * s.n() - s.m() * r.n());
}

}  // namespace ks
