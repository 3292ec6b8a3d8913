#include "valmat/reconstruct.hpp"

#include <algorithm>
#include <string>

#include "valmat/errors.hpp"

namespace valmat {

namespace {

void require_base(const Valuation& v, Subset b) {
  if (!v.family().contains(b))
    throw domain_error("not a base of the underlying matroid");
}

std::string base_labels(const GroundSet& g, Subset b) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_indices(b)) {
    if (!first) out += ",";
    out += g.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

bool skeleton_member(const Valuation& v, Subset b, const LatticePoint& y) {
  require_base(v, b);
  return y.local.contains(b);
}

LatticePoint project_xb(const Valuation& v, const LatticePoint& x, Subset b) {
  require_base(v, b);
  // The projection's height is (v+x)(b), so the descent below never passes
  // the smallest translated base value; use that as a runaway guard.
  long long floor_height = translated_value(v, x.point, v.family().bases().front());
  for (Subset other : v.family().bases())
    floor_height = std::min(floor_height, translated_value(v, x.point, other));
  LatticePoint y = x;
  for (;;) {
    if (y.local.contains(b)) return y;
    // First ray step of e at y is y + 1_{closure of e at y}; the join of the
    // steps over b, pulled down by one, stays above the projection.
    bool first = true;
    LatticePoint up = y;
    for (int e : subset_indices(b)) {
      LatticePoint step = certify(v, add_indicator(y.point, y.local.closure(bit(e))));
      up = first ? std::move(step) : join(v, up, step);
      first = false;
    }
    Point next = up.point;
    for (auto& c : next) --c;
    LatticePoint down = certify(v, std::move(next));
    if (height(v, down) >= height(v, y) || height(v, down) < floor_height)
      throw theorem_violation("skeleton descent failed to converge");
    y = std::move(down);
  }
}

Valuation omega_from_lattice(const Valuation& v, const LatticePoint& x) {
  if (!is_simple(v)) throw domain_error("reconstruction needs a simple valuation");
  long long rx = height(v, x);
  std::vector<long long> values;
  values.reserve(v.family().bases().size());
  for (Subset b : v.family().bases())
    values.push_back(height(v, project_xb(v, x, b)) - rx);
  return Valuation(v.family(), std::move(values));
}

RationalPoint roundtrip_check(const Valuation& v, const LatticePoint& x) {
  if (!is_simple(v)) throw domain_error("round trip needs a simple valuation");
  long long rx = height(v, x);
  std::vector<long long> values;
  for (Subset b : v.family().bases()) {
    long long skeleton_height = height(v, project_xb(v, x, b));
    if (translated_value(v, x.point, b) != skeleton_height)
      throw theorem_violation("(v + x)(B) != r(x_B) for base " +
                              base_labels(v.ground(), b));
    values.push_back(skeleton_height - rx);
  }
  Valuation rebuilt(v.family(), std::move(values));
  auto witness = projectively_equivalent(v, rebuilt);
  if (!witness)
    throw theorem_violation("reconstruction is not projectively equivalent");
  return *witness;
}

ModularReport modular_probe(const Valuation& v,
                            const std::vector<std::pair<Point, Point>>& sample) {
  ModularReport report;
  for (const auto& [px, py] : sample) {
    LatticePoint x = certify(v, px);
    LatticePoint y = certify(v, py);
    long long lhs = height(v, x) + height(v, y);
    long long rhs = height(v, meet(v, x, y)) + height(v, join(v, x, y));
    ++report.pairs_checked;
    if (lhs != rhs) report.violations.push_back({px, py, lhs, rhs});
  }
  return report;
}

}  // namespace valmat
