#pragma once

#include <boost/rational.hpp>
#include <string>

namespace valmat {

/// Exact rational scalar. All non-integer arithmetic in this library runs on
/// this type; there are no tolerances anywhere.
using Rat = boost::rational<long long>;

/// Largest integer <= r. boost::rational keeps the denominator positive, so
/// plain truncation only needs a correction for negative non-integers.
inline long long rat_floor(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

inline bool rat_is_integer(const Rat& r) { return r.denominator() == 1; }

/// Canonical text form: "3", "-1/2".
inline std::string rat_to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace valmat
