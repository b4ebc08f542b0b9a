#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace linopt {

// Exact integers for combinatorial counts (multinomials, symmetric
// polynomials, runtime term counts). Everything log-scaled stays double.
using Bigint = boost::multiprecision::cpp_int;

Bigint factorial(unsigned n);

} // namespace linopt
