#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace corridor {

// Exact nonnegative walk counts; they grow exponentially in the number of
// steps, so everything downstream stays in arbitrary precision.
using Count = boost::multiprecision::cpp_int;

}  // namespace corridor
