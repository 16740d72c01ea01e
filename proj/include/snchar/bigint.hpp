#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace snchar {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt pow2(int e) {
    if (e < 0) throw std::invalid_argument("negative power of two");
    return BigInt(1) << e;
}

}  // namespace snchar
