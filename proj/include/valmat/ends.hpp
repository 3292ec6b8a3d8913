#pragma once

#include <optional>
#include <vector>

#include "valmat/lattice.hpp"

namespace valmat {

/// Finite truncation of a normal ray: starting member, the parallel-class
/// steps walked so far (weakly shrinking), and the ground element the ray
/// points toward. points[l] is the member after l steps.
struct Ray {
  Point start;
  std::vector<Subset> steps;
  int direction;
  std::vector<Point> points;
};

/// Walks the normal ray of element e from x for `depth` steps: each step adds
/// the indicator of the closure of {e} in the matroid at the current point.
/// Needs a simple valuation.
Ray trace_ray(const Valuation& v, const LatticePoint& x, int e, int depth);

/// Separation depth of the rays of e and f from x, in closed form:
/// r(x) - max{(v + x)(B) : e, f in B}. Infinite (and a domain error) for
/// e = f.
long long delta(const Valuation& v, const LatticePoint& x, int e, int f);

/// All pairwise separation depths; the ultrametric itself is exp(-delta), so
/// the exponent is what gets stored. Diagonal entries are infinite (empty).
struct UltrametricMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::optional<long long>>> delta;
};

UltrametricMatrix ultrametric_matrix(const Valuation& v, const LatticePoint& x);

/// Exponent of the tight-span ultrametric: max{(v - p)(B) : e, f in B} for a
/// tight-span point p. At p = -x with r(x) = 0 this equals -delta(x, e, f).
Rat dress_terhalle_metric(const Valuation& v, const RationalPoint& p, int e, int f);

/// x-coordinate of y: per element, how far y dominates the ray of that
/// element from x. General y is shifted above x first and corrected back.
Point coordinate(const Valuation& v, const LatticePoint& x, const LatticePoint& y);

/// Joins the traced ray points e^{c(e)} and returns the resulting member
/// together with a base of its matroid on which the x-coordinate equals c.
std::pair<LatticePoint, Subset> raise(const Valuation& v, const LatticePoint& x,
                                      const Point& c);

/// Matroid structures on ends, which for a finite simple valuation are the
/// ground elements themselves.
BaseFamily matroid_at(const Valuation& v, const LatticePoint& x);

/// Union of the local base families over the whole lattice. Certified
/// per base by projecting some member onto its skeleton; the result is
/// checked to be exactly the underlying family.
BaseFamily matroid_at_infinity(const Valuation& v);

}  // namespace valmat
