#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace rotsys {

// Exact rational charge arithmetic; no floating point anywhere in the
// charge computations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// Canonical "p/q" rendering (q always printed, q > 0).
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

}  // namespace rotsys
