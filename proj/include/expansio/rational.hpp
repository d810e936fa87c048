#pragma once

#include <gmpxx.h>

#include <string>

namespace expansio {

// Exact field scalars. The coefficient field is Q throughout; Gaussian
// pivoting can grow numerators/denominators well past machine range, so
// these are GMP rationals.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

}  // namespace expansio
