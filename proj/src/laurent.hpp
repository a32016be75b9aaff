#pragma once

#include <map>
#include <string>

#include "bigint.hpp"

namespace ks {

// Integer Laurent polynomial, sparse exponent -> coefficient map.
// Zero coefficients are never stored; the zero polynomial is the empty map.
class Laurent {
  public:
    Laurent() = default;

    static Laurent constant(Int c);
    static Laurent one() { return constant(1); }
    // c * t^e
    static Laurent term(Int c, long e);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, Int>& coeffs() const { return coeffs_; }

    Int coeff(long e) const;
    long min_exp() const;  // requires nonzero
    long max_exp() const;  // requires nonzero

    void add_term(long e, const Int& c);

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return coeffs_ != o.coeffs_; }

    // f(t) -> f(t^q), q != 0.
    Laurent substitute_power(long q) const;
    // Termwise k*t^(k-1), valid for negative exponents too.
    Laurent derivative() const;
    // Sum of all coefficients.
    Int eval_at_one() const;
    // f(t) -> f(1/t).
    Laurent reciprocal_arg() const;
    // Multiply by t^k.
    Laurent shifted(long k) const;

    // Terms sorted by descending exponent, e.g. "t^1 - 1 + t^-1".
    std::string str(const std::string& var = "t") const;

  private:
    std::map<long, Int> coeffs_;
};

// The unique +-t^k multiple g of f with g(t) = g(1/t) and g(1) = 1.
// Throws input_error when f is zero or no such normalization exists.
Laurent normalize_alexander(const Laurent& f);

// d^k f / dt^k evaluated at 1.
Int derivative_at_one(const Laurent& f, int k);

}  // namespace ks
