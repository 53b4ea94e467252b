#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace maghom {

using Int = boost::multiprecision::cpp_int;

// Extended distances: kInf marks vertex pairs in different components.
using Dist = std::int32_t;
inline constexpr Dist kInf = std::numeric_limits<Dist>::max();

inline Dist dist_add(Dist a, Dist b) {
    if (a == kInf || b == kInf) return kInf;
    return a + b;
}

inline bool is_finite(Dist d) { return d != kInf; }

} // namespace maghom
