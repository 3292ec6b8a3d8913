#pragma once

#include <vector>

#include "valmat/lattice.hpp"

namespace valmat {

/// Does base b stay a maximizer at y, i.e. does y lie on the skeleton of b?
bool skeleton_member(const Valuation& v, Subset b, const LatticePoint& y);

/// Maximum skeleton point of b below x. Iterates
///   y <- (join over e in b of the first ray step of e at y) - 1
/// until b is a maximizer; each iteration strictly drops the height, so the
/// loop terminates at the projection.
LatticePoint project_xb(const Valuation& v, const LatticePoint& x, Subset b);

/// The valuation read back off the lattice from basepoint x: each base b of
/// the underlying matroid gets r(x_b) - r(x).
Valuation omega_from_lattice(const Valuation& v, const LatticePoint& x);

/// Verifies (v + x)(b) = r(x_b) on every base and returns a projective-
/// equivalence witness between v and the reconstruction. Identity failures
/// are theorem violations.
RationalPoint roundtrip_check(const Valuation& v, const LatticePoint& x);

struct ModularViolation {
  Point x;
  Point y;
  long long height_sum;       // r(x) + r(y)
  long long meet_join_sum;    // r(x ^ y) + r(x v y)
};

struct ModularReport {
  int pairs_checked = 0;
  std::vector<ModularViolation> violations;
  bool all_modular() const { return violations.empty(); }
};

/// Checks the semimodular inequality for equality on each sampled pair.
/// All-equal is evidence of lattice modularity, not a proof.
ModularReport modular_probe(const Valuation& v,
                            const std::vector<std::pair<Point, Point>>& sample);

}  // namespace valmat
