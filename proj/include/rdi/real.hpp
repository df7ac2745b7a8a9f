#pragma once

// Extended-precision scalar used by the inversion core.
//
// The inversion subtracts two terms of order mc^2 to recover potentials that
// are 10 orders of magnitude smaller at laboratory field strengths, so the
// core runs in IEEE binary128.

#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <string>

namespace rdi {

using Real = boost::multiprecision::number<boost::multiprecision::float128_backend,
                                           boost::multiprecision::et_off>;

inline double to_double(const Real& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

inline Real real_pi() { return boost::multiprecision::acos(Real(-1)); }

/// Parses a decimal literal at full binary128 precision.
inline Real parse_real(const std::string& text) { return Real(text); }

}  // namespace rdi
