#include "valmat/ends.hpp"

#include <algorithm>
#include <string>

#include "valmat/errors.hpp"
#include "valmat/reconstruct.hpp"

namespace valmat {

namespace {

void require_simple(const Valuation& v) {
  if (!is_simple(v))
    throw domain_error("operation needs a simple valuation; simplify first");
}

void require_element(const Valuation& v, int e) {
  if (e < 0 || e >= v.ground().size()) throw domain_error("element out of range");
}

}  // namespace

Ray trace_ray(const Valuation& v, const LatticePoint& x, int e, int depth) {
  require_simple(v);
  require_element(v, e);
  if (depth < 0) throw domain_error("ray depth must be nonnegative");
  Ray ray{x.point, {}, e, {x.point}};
  LatticePoint a = x;
  for (int l = 0; l < depth; ++l) {
    Subset cls = a.local.closure(bit(e));  // parallel class of e at a
    a = certify(v, add_indicator(a.point, cls));
    ray.steps.push_back(cls);
    ray.points.push_back(a.point);
  }
  return ray;
}

long long delta(const Valuation& v, const LatticePoint& x, int e, int f) {
  require_simple(v);
  require_element(v, e);
  require_element(v, f);
  if (e == f) throw domain_error("delta is infinite on the diagonal");
  bool seen = false;
  long long best = 0;
  for (Subset b : v.family().bases()) {
    if (!has(b, e) || !has(b, f)) continue;
    long long val = translated_value(v, x.point, b);
    if (!seen || val > best) best = val, seen = true;
  }
  if (!seen) throw domain_error("no base contains both elements");
  long long d = height(v, x) - best;
  if (d < 0) throw theorem_violation("negative ray separation depth");
  return d;
}

UltrametricMatrix ultrametric_matrix(const Valuation& v, const LatticePoint& x) {
  require_simple(v);
  const int m = v.ground().size();
  UltrametricMatrix out;
  out.labels = v.ground().labels();
  out.delta.assign(m, std::vector<std::optional<long long>>(m));
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      long long d = delta(v, x, e, f);
      out.delta[e][f] = d;
      out.delta[f][e] = d;
    }
  return out;
}

Rat dress_terhalle_metric(const Valuation& v, const RationalPoint& p, int e, int f) {
  require_element(v, e);
  require_element(v, f);
  if (e == f) throw domain_error("metric exponent undefined on the diagonal");
  if (!is_tight_span_point(v, p))
    throw domain_error("point is not in the tight span");
  bool seen = false;
  Rat best(0);
  for (std::size_t i = 0; i < v.family().bases().size(); ++i) {
    Subset b = v.family().bases()[i];
    if (!has(b, e) || !has(b, f)) continue;
    Rat val(v.value_at(static_cast<int>(i)));
    for (int g : subset_indices(b)) val -= p[g];
    if (!seen || val > best) best = val, seen = true;
  }
  if (!seen) throw domain_error("no base contains both elements");
  return best;
}

Point coordinate(const Valuation& v, const LatticePoint& x, const LatticePoint& y) {
  require_simple(v);
  long long k = 0;
  for (std::size_t i = 0; i < x.point.size(); ++i)
    k = std::max(k, x.point[i] - y.point[i]);
  Point lifted = y.point;
  for (auto& c : lifted) c += k;
  LatticePoint yk = certify(v, std::move(lifted));
  // Along a ray every step raises the height by one, so r[x, y + k1] bounds
  // how far any dominated prefix can reach.
  long long depth_cap = height_between(v, x, yk);
  Point out(x.point.size(), 0);
  for (int e = 0; e < v.ground().size(); ++e) {
    LatticePoint a = x;
    long long l = 0;
    while (l <= depth_cap) {
      LatticePoint next = certify(v, add_indicator(a.point, a.local.closure(bit(e))));
      if (!point_leq(next.point, yk.point)) break;
      a = std::move(next);
      ++l;
    }
    out[e] = l - k;
  }
  return out;
}

std::pair<LatticePoint, Subset> raise(const Valuation& v, const LatticePoint& x,
                                      const Point& c) {
  require_simple(v);
  if (c.size() != x.point.size()) throw domain_error("vector has wrong dimension");
  for (long long ce : c)
    if (ce < 0) throw domain_error("raise vector must be nonnegative");
  LatticePoint y = x;
  for (int e = 0; e < v.ground().size(); ++e) {
    if (c[e] == 0) continue;
    Ray ray = trace_ray(v, x, e, static_cast<int>(c[e]));
    y = join(v, y, certify(v, ray.points.back()));
  }
  Point yx = coordinate(v, x, y);
  for (Subset b : y.local.bases()) {
    bool matches = true;
    for (int e : subset_indices(b)) {
      if (yx[e] != c[e]) {
        matches = false;
        break;
      }
    }
    if (matches) return {y, b};
  }
  throw theorem_violation("no local base matches the requested coordinates");
}

BaseFamily matroid_at(const Valuation& v, const LatticePoint& x) {
  require_simple(v);
  return x.local;
}

BaseFamily matroid_at_infinity(const Valuation& v) {
  require_simple(v);
  LatticePoint seed = find_point(v);
  std::vector<Subset> witnessed;
  for (Subset b : v.family().bases()) {
    LatticePoint xb = project_xb(v, seed, b);
    if (!skeleton_member(v, b, xb))
      throw theorem_violation("skeleton projection missed its base");
    witnessed.push_back(b);
  }
  BaseFamily out(v.ground(), v.rank(), std::move(witnessed));
  if (!(out == v.family()))
    throw theorem_violation("matroid at infinity differs from the underlying family");
  return out;
}

}  // namespace valmat
