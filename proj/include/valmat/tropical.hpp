#pragma once

#include <vector>

#include "valmat/valuation.hpp"

namespace valmat {

/// Writing a rational member over its floor: x = base + sum of lambda_i over
/// the indicator of flat_i, with flats strictly nested, coefficients strictly
/// positive, and their sum below 1. Each flat belongs to the maximizer
/// matroid at the base. This is a normal form: zero coefficients are never
/// emitted, so the full set appears only when it carries weight.
struct FlatChainDecomposition {
  Point base;
  std::vector<std::pair<Subset, Rat>> chain;
};

/// Membership by the loop-free criterion: the maximizer matroid of v + x has
/// no loop.
bool is_member(const Valuation& v, const Point& x);

/// Membership by the twice-attained-maximum criterion: for every subset C of
/// size rank+1, the maximum of v(C - f) - x(f) over f with C - f a base is
/// attained at least twice (vacuous when no f qualifies). Agrees with
/// is_member on integer points. Enumerates all (rank+1)-subsets; capped.
bool is_member_tw(const Valuation& v, const RationalPoint& x);

/// Componentwise floor of a rational member; the result is again a member.
Point floor_point(const Valuation& v, const RationalPoint& x);

FlatChainDecomposition decompose(const Valuation& v, const RationalPoint& x);

/// Componentwise minimum of two members; membership of the result is
/// asserted, not assumed.
Point trop_min(const Valuation& v, const Point& x, const Point& y);

/// The fixpoint equations cutting out the tight span.
bool is_tight_span_point(const Valuation& v, const RationalPoint& p);

/// Tight-span representative of a member: shift x along the all-one
/// direction until max(v + x) = 0, then negate. Verified against the
/// fixpoint equations.
RationalPoint tight_span_point(const Valuation& v, const Point& x);

}  // namespace valmat
