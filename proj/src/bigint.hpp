#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ks {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace ks
