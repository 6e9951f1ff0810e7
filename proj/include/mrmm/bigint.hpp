#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mrmm {

using BigUint = boost::multiprecision::cpp_int;

inline BigUint pow2_minus_one(unsigned d) {
    BigUint v = 1;
    v <<= d;
    return v - 1;
}

}  // namespace mrmm
