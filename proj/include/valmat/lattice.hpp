#pragma once

#include <vector>

#include "valmat/tropical.hpp"

namespace valmat {

/// Certified integer point of the tropical linear space, carrying its
/// maximizer matroid. The cache is computed at construction; every lattice
/// operation reads it.
struct LatticePoint {
  Point point;
  BaseFamily local;
};

/// Certifies membership (domain_error otherwise) and caches the maximizer
/// matroid.
LatticePoint certify(const Valuation& v, Point x);

/// Height r(x) = max over bases of (v + x)(B). Rises by one along covers.
long long height(const Valuation& v, const LatticePoint& x);

/// Length of a maximal chain from x to y, i.e. r(y) - r(x).
long long height_between(const Valuation& v, const LatticePoint& x,
                         const LatticePoint& y);

/// All points covering x: x + 1_F for the parallel classes F of the local
/// matroid.
std::vector<LatticePoint> covers(const Valuation& v, const LatticePoint& x);

/// All points covered by x: (x - 1) + 1_H for the hyperplane flats H of the
/// local matroid (which equals the matroid at x - 1).
std::vector<LatticePoint> cocovers(const Valuation& v, const LatticePoint& x);

LatticePoint meet(const Valuation& v, const LatticePoint& x, const LatticePoint& y);

/// Minimum member above both arguments. Starts from x + k1 above
/// max(x, y) and descends through cocovers that stay above max(x, y); the
/// upper set is closed under componentwise min, so the local minimum reached
/// is the join.
LatticePoint join(const Valuation& v, const LatticePoint& x, const LatticePoint& y);

/// All members of the box [x, y], ordered by (height, lex). Box size capped.
std::vector<LatticePoint> interval(const Valuation& v, const LatticePoint& x,
                                   const LatticePoint& y);

/// A maximal cover chain whose interval contains nothing else. The chain must
/// already be consecutive covers (structural error otherwise).
bool is_segment(const Valuation& v, const std::vector<Point>& chain);

/// Some member, found by raising loops of the maximizer matroid one at a time
/// from the origin. The result is not claimed minimal in any sense.
LatticePoint find_point(const Valuation& v);

}  // namespace valmat
