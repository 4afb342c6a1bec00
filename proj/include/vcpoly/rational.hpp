#ifndef VCPOLY_RATIONAL_HPP
#define VCPOLY_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace vcpoly {

// All polytope arithmetic is exact. Rat is always kept canonical
// (gmp canonicalizes results of arithmetic; constructors from num/den
// go through make_rat below).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace vcpoly

#endif
