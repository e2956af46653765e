#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcseq {

// Exact arbitrary-precision integer used for every count and bound.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(std::uint64_t base, std::size_t exp) {
  return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
}

inline std::string to_decimal(const BigCount& v) { return v.str(); }

}  // namespace lcseq
