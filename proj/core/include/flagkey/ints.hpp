#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace flagkey {

// Exact arithmetic everywhere; immanant sums over S_n overflow fixed widths.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace flagkey
