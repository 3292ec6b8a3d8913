#include "valmat/tropical.hpp"

#include <algorithm>
#include <string>

#include "valmat/caps.hpp"
#include "valmat/errors.hpp"

namespace valmat {

namespace {

void require_dimension(const Valuation& v, std::size_t n) {
  if (n != static_cast<std::size_t>(v.ground().size()))
    throw domain_error("point has wrong dimension");
}

}  // namespace

bool is_member(const Valuation& v, const Point& x) {
  require_dimension(v, x.size());
  return maximizer_family(v, x).loops() == kEmptySubset;
}

bool is_member_tw(const Valuation& v, const RationalPoint& x) {
  require_dimension(v, x.size());
  const int m = v.ground().size();
  const int k = v.rank() + 1;
  if (static_cast<std::size_t>(m) > caps().tw_ground ||
      static_cast<std::size_t>(v.rank()) > caps().tw_rank)
    throw domain_error("(TW) check capped at " + std::to_string(caps().tw_ground) +
                       " elements / rank " + std::to_string(caps().tw_rank) +
                       " (override with VALMAT_CAPS)");
  if (k > m) return true;  // no (rank+1)-subsets

  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    Subset c = kEmptySubset;
    for (int i : pick) c |= bit(i);
    bool first = true;
    Rat best(0);
    int attained = 0;
    for (int f : pick) {
      Subset cand = c & ~bit(f);
      int idx = v.family().index_of(cand);
      if (idx < 0) continue;
      Rat val = Rat(v.value_at(idx)) - x[f];
      if (first || val > best) {
        best = val;
        attained = 1;
        first = false;
      } else if (val == best) {
        ++attained;
      }
    }
    if (!first && attained < 2) return false;

    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

Point floor_point(const Valuation& v, const RationalPoint& x) {
  require_dimension(v, x.size());
  if (!is_member_tw(v, x))
    throw domain_error("point is not in the tropical linear space");
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = rat_floor(x[i]);
  if (!is_member(v, out))
    throw theorem_violation("floor of a member left the tropical linear space");
  return out;
}

FlatChainDecomposition decompose(const Valuation& v, const RationalPoint& x) {
  Point base = floor_point(v, x);  // also checks membership
  std::vector<Rat> frac(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) frac[i] = x[i] - Rat(base[i]);

  std::vector<Rat> levels(frac);
  std::sort(levels.begin(), levels.end(), std::greater<Rat>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  while (!levels.empty() && levels.back() == Rat(0)) levels.pop_back();

  BaseFamily local = maximizer_family(v, base);
  FlatChainDecomposition out{std::move(base), {}};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Subset f = kEmptySubset;
    for (std::size_t e = 0; e < frac.size(); ++e)
      if (frac[e] >= levels[i]) f |= bit(static_cast<int>(e));
    if (local.closure(f) != f)
      throw theorem_violation("fractional level set is not a flat at the floor");
    Rat coeff = (i + 1 < levels.size()) ? levels[i] - levels[i + 1] : levels[i];
    out.chain.emplace_back(f, coeff);
  }
  return out;
}

Point trop_min(const Valuation& v, const Point& x, const Point& y) {
  if (!is_member(v, x) || !is_member(v, y))
    throw domain_error("tropical minimum needs two members");
  Point out = point_min(x, y);
  if (!is_member(v, out))
    throw theorem_violation("minimum of two members left the tropical linear space");
  return out;
}

bool is_tight_span_point(const Valuation& v, const RationalPoint& p) {
  require_dimension(v, p.size());
  for (int e = 0; e < v.ground().size(); ++e) {
    bool seen = false;
    Rat best(0);
    for (std::size_t i = 0; i < v.family().bases().size(); ++i) {
      Subset b = v.family().bases()[i];
      if (!has(b, e)) continue;
      Rat val(v.value_at(static_cast<int>(i)));
      for (int f : subset_indices(b & ~bit(e))) val -= p[f];
      if (!seen || val > best) {
        best = val;
        seen = true;
      }
    }
    if (!seen || best != p[e]) return false;
  }
  return true;
}

RationalPoint tight_span_point(const Valuation& v, const Point& x) {
  if (!is_member(v, x)) throw domain_error("tight-span projection needs a member");
  if (v.rank() == 0) throw domain_error("tight span of a rank-0 valuation");
  long long height = translated_value(v, x, maximizer_family(v, x).bases().front());
  Rat shift(height, v.rank());
  RationalPoint p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = shift - Rat(x[i]);
  if (!is_tight_span_point(v, p))
    throw theorem_violation("shifted member violates the tight-span fixpoint");
  return p;
}

}  // namespace valmat
