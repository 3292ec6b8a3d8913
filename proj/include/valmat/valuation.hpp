#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valmat/matroid.hpp"
#include "valmat/rational.hpp"

namespace valmat {

/// Counterexample to the exchange inequality: for bases b, bprime and
/// drop in b \ bprime, every candidate swap strictly loses.
struct ExcCounterexample {
  Subset b;
  Subset bprime;
  int drop;
};

/// Integer-valued valuated matroid: one value per base of an explicit family.
/// Off-family values are an implicit minus infinity (absence).
class Valuation {
 public:
  Valuation(BaseFamily family, std::vector<long long> values);

  const BaseFamily& family() const { return family_; }
  const GroundSet& ground() const { return family_.ground(); }
  int rank() const { return family_.rank(); }
  long long value(Subset base) const;
  long long value_at(int base_index) const { return values_[base_index]; }
  const std::vector<long long>& values() const { return values_; }

  bool operator==(const Valuation& other) const {
    return family_ == other.family_ && values_ == other.values_;
  }

 private:
  BaseFamily family_;
  std::vector<long long> values_;  // aligned with family_.bases()
};

/// Builds a valuation from (base, value) pairs in any order; rejects
/// duplicate bases. Keeps values aligned with the family's canonical order.
Valuation make_valuation(GroundSet ground, int rank,
                         std::vector<std::pair<Subset, long long>> entries);

/// Exchange-axiom check. Requires the family to pass the matroid base axiom
/// (domain_error naming the failed exchange otherwise). Returns the first
/// counterexample in base order, or empty when the axiom holds.
std::optional<ExcCounterexample> check_exc(const Valuation& v);

/// (v + x)(B) = v(B) + sum of x over B. Overflow is a checked error.
Valuation translate(const Valuation& v, const Point& x);

/// Value of v + x on one base, with overflow checks.
long long translated_value(const Valuation& v, const Point& x, Subset base);

/// Steepest single-exchange ascent from start. A local optimum of a valuated
/// matroid is a global maximum, so the result attains max v.
std::pair<Subset, long long> maximize(const Valuation& v, Subset start);

/// The matroid of maximizers of v + x.
BaseFamily maximizer_family(const Valuation& v, const Point& x);

/// Restriction of v to one representative per parallel class, loops deleted.
/// `removed` maps each deleted non-loop label to (representative label, alpha)
/// with v(K + e) = v(K + rep) + alpha for every applicable K; alpha is
/// validated against every such K.
struct Simplification {
  Valuation reduced;
  std::map<std::string, std::pair<std::string, long long>> removed;
};

Simplification simplify(const Valuation& v);

bool is_simple(const Valuation& v);

/// Exact rational vector indexed by the ground set.
using RationalPoint = std::vector<Rat>;

RationalPoint to_rational(const Point& p);

/// Witness h with w = v + h, if one exists. Solved by propagating value
/// differences along single exchanges and fixing the free per-component
/// shifts; the candidate is verified on every base. Witnesses may be
/// rational: the solvable systems over the integers are a strict subset.
std::optional<RationalPoint> projectively_equivalent(const Valuation& v,
                                                     const Valuation& w);

}  // namespace valmat
