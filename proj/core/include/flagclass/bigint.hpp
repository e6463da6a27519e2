#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace flagclass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(std::uint64_t base, unsigned exponent) {
    return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace flagclass
