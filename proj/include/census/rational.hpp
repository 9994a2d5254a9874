#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace census {

// Exact arithmetic everywhere. Floating point is not used in this project;
// anything that looks like it needs a float (timings, digests) is handled
// with integers instead.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return rat_den(x) == 1; }

inline Int rat_floor(const Rat& x) {
    Int n = rat_num(x);
    Int d = rat_den(x);
    Int q = n / d;
    if (q * d != n && n < 0) --q;
    return q;
}

// x - floor(x), always in [0,1)
inline Rat frac_part(const Rat& x) { return x - Rat(rat_floor(x)); }

inline std::string rat_str(const Rat& x) { return x.str(); }

}  // namespace census
