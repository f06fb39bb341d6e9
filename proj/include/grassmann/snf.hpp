#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grassmann {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all positive,
// computed by exact row/column reduction.  Arbitrary-precision entries: the
// intermediate values can grow well past the inputs.
std::vector<BigInt> smith_normal_form(BigMatrix m);

}  // namespace grassmann
