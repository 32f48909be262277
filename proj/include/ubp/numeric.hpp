#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ubp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace ubp
