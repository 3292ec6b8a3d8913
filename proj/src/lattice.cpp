#include "valmat/lattice.hpp"

#include <algorithm>
#include <string>

#include "valmat/caps.hpp"
#include "valmat/errors.hpp"

namespace valmat {

namespace {

Point shifted(Point p, long long k) {
  for (auto& c : p) c += k;
  return p;
}

}  // namespace

LatticePoint certify(const Valuation& v, Point x) {
  if (x.size() != static_cast<std::size_t>(v.ground().size()))
    throw domain_error("point has wrong dimension");
  BaseFamily local = maximizer_family(v, x);
  if (local.loops() != kEmptySubset)
    throw domain_error("point is not in the tropical linear space");
  return LatticePoint{std::move(x), std::move(local)};
}

long long height(const Valuation& v, const LatticePoint& x) {
  return translated_value(v, x.point, x.local.bases().front());
}

long long height_between(const Valuation& v, const LatticePoint& x,
                         const LatticePoint& y) {
  return height(v, y) - height(v, x);
}

std::vector<LatticePoint> covers(const Valuation& v, const LatticePoint& x) {
  std::vector<LatticePoint> out;
  for (Subset cls : x.local.parallel_classes())
    out.push_back(certify(v, add_indicator(x.point, cls)));
  return out;
}

std::vector<LatticePoint> cocovers(const Valuation& v, const LatticePoint& x) {
  // The maximizer matroid is invariant under all-one shifts, so the matroid
  // at x - 1 is the cached local one.
  std::vector<LatticePoint> out;
  Point down = shifted(x.point, -1);
  for (Subset h : x.local.hyperplanes())
    out.push_back(certify(v, add_indicator(down, h)));
  return out;
}

LatticePoint meet(const Valuation& v, const LatticePoint& x, const LatticePoint& y) {
  Point m = point_min(x.point, y.point);
  BaseFamily local = maximizer_family(v, m);
  if (local.loops() != kEmptySubset)
    throw theorem_violation("componentwise minimum of members is not a member");
  return LatticePoint{std::move(m), std::move(local)};
}

LatticePoint join(const Valuation& v, const LatticePoint& x, const LatticePoint& y) {
  Point target = point_max(x.point, y.point);
  long long k = 0;
  for (std::size_t i = 0; i < target.size(); ++i)
    k = std::max(k, y.point[i] - x.point[i]);
  LatticePoint u = certify(v, shifted(x.point, k));
  for (;;) {
    bool descended = false;
    for (LatticePoint& c : cocovers(v, u)) {
      if (point_leq(target, c.point)) {
        u = std::move(c);
        descended = true;
        break;
      }
    }
    if (!descended) return u;
  }
}

std::vector<LatticePoint> interval(const Valuation& v, const LatticePoint& x,
                                   const LatticePoint& y) {
  if (!point_leq(x.point, y.point))
    throw domain_error("interval endpoints are not comparable");
  std::size_t box = 1;
  for (std::size_t i = 0; i < x.point.size(); ++i) {
    std::size_t width = static_cast<std::size_t>(y.point[i] - x.point[i]) + 1;
    if (box > caps().interval_points / width)
      throw domain_error("interval box exceeds " +
                         std::to_string(caps().interval_points) +
                         " points (override with VALMAT_CAPS)");
    box *= width;
  }
  std::vector<LatticePoint> out;
  Point p = x.point;
  for (;;) {
    BaseFamily local = maximizer_family(v, p);
    if (local.loops() == kEmptySubset) out.push_back(LatticePoint{p, std::move(local)});
    std::size_t i = 0;
    while (i < p.size() && p[i] == y.point[i]) {
      p[i] = x.point[i];
      ++i;
    }
    if (i == p.size()) break;
    ++p[i];
  }
  std::sort(out.begin(), out.end(), [&](const LatticePoint& a, const LatticePoint& b) {
    long long ha = height(v, a), hb = height(v, b);
    if (ha != hb) return ha < hb;
    return a.point < b.point;
  });
  return out;
}

bool is_segment(const Valuation& v, const std::vector<Point>& chain) {
  if (chain.empty()) throw domain_error("empty chain");
  std::vector<LatticePoint> pts;
  for (const Point& p : chain) pts.push_back(certify(v, p));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    // Consecutive members must differ by the indicator of a parallel class.
    Subset step = kEmptySubset;
    for (std::size_t e = 0; e < chain[i].size(); ++e) {
      long long d = chain[i + 1][e] - chain[i][e];
      if (d == 1)
        step |= bit(static_cast<int>(e));
      else if (d != 0)
        throw domain_error("chain step is not a cover");
    }
    auto classes = pts[i].local.parallel_classes();
    if (std::find(classes.begin(), classes.end(), step) == classes.end())
      throw domain_error("chain step is not a cover");
  }
  if (chain.size() == 1) return true;
  auto box = interval(v, pts.front(), pts.back());
  if (box.size() != chain.size()) return false;
  std::vector<Point> sorted_chain = chain;
  std::sort(sorted_chain.begin(), sorted_chain.end());
  std::vector<Point> sorted_box;
  for (const auto& lp : box) sorted_box.push_back(lp.point);
  std::sort(sorted_box.begin(), sorted_box.end());
  return sorted_box == sorted_chain;
}

LatticePoint find_point(const Valuation& v) {
  if (v.family().loops() != kEmptySubset)
    throw domain_error(
        "underlying matroid has a loop; the tropical linear space is empty");
  Point c = zero_point(v.ground());
  for (int round = 0; round <= v.ground().size(); ++round) {
    BaseFamily local = maximizer_family(v, c);
    Subset loops = local.loops();
    if (loops == kEmptySubset) return LatticePoint{std::move(c), std::move(local)};
    int e = subset_indices(loops).front();
    long long top = translated_value(v, c, local.bases().front());
    // Raising e by its deficit pulls one base through e into the maximizers
    // and leaves the current maximizers untouched.
    bool seen = false;
    long long best = 0;
    for (Subset b : v.family().bases()) {
      if (!has(b, e)) continue;
      long long val = translated_value(v, c, b);
      if (!seen || val > best) best = val, seen = true;
    }
    c[e] += top - best;
  }
  throw theorem_violation("loop raising failed to terminate");
}

}  // namespace valmat
