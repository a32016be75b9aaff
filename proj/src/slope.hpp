#pragma once

#include <string>

#include "bigint.hpp"

namespace ks {

// A slope m/n on a torus, in meridian/longitude coordinates.  Stored reduced
// with n >= 0; the meridian (infinity) is (1,0) and the longitude is (0,1).
class Slope {
  public:
    // Reduces and normalizes the sign.  Throws input_error on (0,0).
    static Slope make(Int m, Int n);

    static Slope infinity() { return Slope(1, 0); }

    const Int& m() const { return m_; }
    const Int& n() const { return n_; }

    bool is_infinity() const { return n_ == 0; }

    Slope negated() const;

    // Accepts "m/n", "m" (meaning m/1) or "inf".
    static Slope parse(const std::string& text);

    // Canonical "m/n" form ("inf" for the meridian).
    std::string str() const;

    bool operator==(const Slope& o) const { return m_ == o.m_ && n_ == o.n_; }
    bool operator!=(const Slope& o) const { return !(*this == o); }
    bool operator<(const Slope& o) const {
        return m_ < o.m_ || (m_ == o.m_ && n_ < o.n_);
    }

  private:
    Slope(Int m, Int n) : m_(std::move(m)), n_(std::move(n)) {}
    Int m_;
    Int n_;
};

// Minimal geometric intersection number |m*n' - m'*n|.
Int intersection_number(const Slope& r, const Slope& s);

}  // namespace ks
