#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "valmat/ends.hpp"
#include "valmat/errors.hpp"

using namespace valmat;
using valmat::testing::corpus;
using valmat::testing::fixture_rep23;
using valmat::testing::fixture_tree;
using valmat::testing::fixture_u23;
using valmat::testing::sample_members;

namespace {

Subset S(std::initializer_list<int> indices) {
  Subset s = kEmptySubset;
  for (int i : indices) s |= bit(i);
  return s;
}

/// Simple corpus instances with at least two elements.
std::vector<valmat::testing::NamedInstance> simple_corpus() {
  std::vector<valmat::testing::NamedInstance> out;
  for (const auto& inst : corpus())
    if (is_simple(inst.v) && inst.v.ground().size() >= 2) out.push_back(inst);
  return out;
}

}  // namespace

TEST_CASE("ray tracing follows closures") {
  Valuation u = fixture_u23();
  Ray r = trace_ray(u, certify(u, {0, 0, 0}), 0, 3);
  CHECK(r.steps == std::vector<Subset>{S({0}), S({0}), S({0})});
  CHECK(r.points.back() == Point{3, 0, 0});

  Valuation rep = fixture_rep23();
  Ray r2 = trace_ray(rep, certify(rep, {1, 1, 0}), 1, 2);
  CHECK(r2.steps == std::vector<Subset>{S({1, 2}), S({1})});
  CHECK(r2.points == std::vector<Point>{{1, 1, 0}, {1, 2, 1}, {1, 3, 1}});

  Valuation tree = fixture_tree();
  Ray r3 = trace_ray(tree, certify(tree, {0, 0, 0}), 0, 1);
  CHECK(r3.steps == std::vector<Subset>{S({0, 1})});
}

TEST_CASE("ray prefixes are segments") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    LatticePoint x = find_point(v);
    for (int e = 0; e < std::min(3, v.ground().size()); ++e) {
      Ray r = trace_ray(v, x, e, 4);
      CHECK(is_segment(v, r.points));
    }
  }
}

TEST_CASE("ray steps shrink toward the direction singleton") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    LatticePoint x = find_point(v);
    for (int e = 0; e < std::min(3, v.ground().size()); ++e) {
      long long needed = 1;
      for (int f = 0; f < v.ground().size(); ++f)
        if (f != e) needed = std::max(needed, delta(v, x, e, f) + 1);
      Ray r = trace_ray(v, x, e, static_cast<int>(needed));
      for (std::size_t i = 0; i + 1 < r.steps.size(); ++i) {
        CHECK(subset_of(r.steps[i + 1], r.steps[i]));
        CHECK(has(r.steps[i], e));
      }
      CHECK(r.steps.back() == bit(e));
    }
  }
}

TEST_CASE("ray tracing requires a simple valuation") {
  GroundSet g({"e1", "e2", "e3"});
  Valuation parallel = make_valuation(g, 2, {{S({0, 1}), 0}, {S({0, 2}), 0}});
  CHECK_THROWS_AS(trace_ray(parallel, LatticePoint{{0, 0, 0}, parallel.family()}, 0, 1),
                  domain_error);
}

TEST_CASE("separation depth in closed form") {
  Valuation u = fixture_u23();
  LatticePoint zero = certify(u, {0, 0, 0});
  CHECK(delta(u, zero, 0, 1) == 0);
  CHECK(delta(u, zero, 0, 2) == 0);
  CHECK(delta(u, zero, 1, 2) == 0);

  Valuation rep = fixture_rep23();
  CHECK(delta(rep, certify(rep, {1, 1, 0}), 1, 2) == 1);

  Valuation tree = fixture_tree();
  CHECK(delta(tree, certify(tree, {0, 0, 0}), 0, 1) == 2);

  CHECK_THROWS_AS(delta(u, zero, 1, 1), domain_error);
}

TEST_CASE("closed form equals ray agreement length") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    for (const LatticePoint& x : sample_members(v, 61, 3, 3)) {
      for (int e = 0; e < v.ground().size(); ++e)
        for (int f = e + 1; f < v.ground().size(); ++f) {
          long long expected = delta(v, x, e, f);
          if (expected > 10) continue;
          CHECK(oracle::brute_delta(v, x, e, f, static_cast<int>(expected) + 1) ==
                expected);
        }
    }
  }
}

TEST_CASE("separation depths satisfy the anti-ultrametric inequality") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    LatticePoint x = find_point(v);
    const int m = v.ground().size();
    for (int e = 0; e < m; ++e)
      for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
          if (e == f || f == g || e == g) continue;
          CHECK(delta(v, x, e, f) >=
                std::min(delta(v, x, e, g), delta(v, x, g, f)));
        }
  }
}

TEST_CASE("depths move by at most one along covers") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    for (const LatticePoint& x : sample_members(v, 67, 3, 3)) {
      for (const LatticePoint& y : covers(v, x)) {
        for (int e = 0; e < v.ground().size(); ++e)
          for (int f = e + 1; f < v.ground().size(); ++f) {
            long long step = delta(v, y, e, f) - delta(v, x, e, f);
            CHECK(step <= 1);
            CHECK(step >= -1);
          }
      }
    }
  }
}

TEST_CASE("changing the basepoint moves depths by at most the height gap") {
  // Walking x -> x v y -> y changes delta by at most one per cover, so the
  // depths at two basepoints differ by at most the length of that path.
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    auto pts = sample_members(v, 67, 6, 3);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      const LatticePoint& x = pts[i];
      const LatticePoint& y = pts[i + 1];
      LatticePoint top = join(v, x, y);
      long long path = (height(v, top) - height(v, x)) +
                       (height(v, top) - height(v, y));
      for (int e = 0; e < v.ground().size(); ++e)
        for (int f = e + 1; f < v.ground().size(); ++f) {
          long long gap = delta(v, x, e, f) - delta(v, y, e, f);
          CHECK(gap <= path);
          CHECK(-gap <= path);
        }
    }
  }
}

TEST_CASE("ultrametric matrix is symmetric with infinite diagonal") {
  Valuation tree = fixture_tree();
  UltrametricMatrix m = ultrametric_matrix(tree, certify(tree, {0, 0, 0}));
  CHECK(m.delta[0][1] == 2);
  CHECK(m.delta[0][2] == 0);
  CHECK(m.delta[1][2] == 0);
  for (int i = 0; i < 3; ++i) {
    CHECK(!m.delta[i][i].has_value());
    for (int j = 0; j < 3; ++j) CHECK(m.delta[i][j] == m.delta[j][i]);
  }

  Valuation u = fixture_u23();
  UltrametricMatrix mu = ultrametric_matrix(u, certify(u, {0, 0, 0}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(mu.delta[i][j] == 0);
}

TEST_CASE("tight-span metric exponents") {
  Valuation tree = fixture_tree();
  RationalPoint origin(3, Rat(0));
  CHECK(dress_terhalle_metric(tree, origin, 0, 1) == Rat(-2));
  CHECK(dress_terhalle_metric(tree, origin, 0, 2) == Rat(0));
  CHECK(dress_terhalle_metric(tree, origin, 0, 1) ==
        dress_terhalle_metric(tree, origin, 1, 0));
  CHECK_THROWS_AS(dress_terhalle_metric(tree, RationalPoint(3, Rat(7)), 0, 1),
                  domain_error);
}

TEST_CASE("tight-span exponents match negated depths at height zero") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    // Descend to a member of height zero, then compare the two metrics.
    LatticePoint x = find_point(v);
    while (height(v, x) > 0) x = cocovers(v, x).front();
    while (height(v, x) < 0) x = covers(v, x).front();
    REQUIRE(height(v, x) == 0);
    RationalPoint p(x.point.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = Rat(-x.point[i]);
    REQUIRE(is_tight_span_point(v, p));
    for (int e = 0; e < v.ground().size(); ++e)
      for (int f = e + 1; f < v.ground().size(); ++f)
        CHECK(dress_terhalle_metric(v, p, e, f) == Rat(-delta(v, x, e, f)));
  }
}

TEST_CASE("coordinates count dominated ray steps") {
  Valuation u = fixture_u23();
  LatticePoint zero = certify(u, {0, 0, 0});
  CHECK(coordinate(u, zero, certify(u, {2, 0, 0})) == Point{2, 0, 0});
  CHECK(coordinate(u, zero, zero) == Point{0, 0, 0});

  Valuation rep = fixture_rep23();
  CHECK(coordinate(rep, certify(rep, {0, 1, 0}), certify(rep, {1, 2, 1})) ==
        Point{1, 1, 1});
}

TEST_CASE("coordinates negate when the basepoints swap") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    auto pts = sample_members(v, 71, 6, 3);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      Point forward = coordinate(v, pts[i], pts[i + 1]);
      Point backward = coordinate(v, pts[i + 1], pts[i]);
      for (std::size_t e = 0; e < forward.size(); ++e)
        CHECK(forward[e] == -backward[e]);
    }
  }
}

TEST_CASE("coordinates add along chains") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    LatticePoint x = find_point(v);
    for (const LatticePoint& y : covers(v, x)) {
      for (const LatticePoint& z : covers(v, y)) {
        Point zx = coordinate(v, x, z);
        Point zy = coordinate(v, y, z);
        Point yx = coordinate(v, x, y);
        for (std::size_t e = 0; e < zx.size(); ++e)
          CHECK(zx[e] == zy[e] + yx[e]);
      }
    }
  }
}

TEST_CASE("a member is the join of its coordinate ray points") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    LatticePoint x = find_point(v);
    for (const LatticePoint& y : sample_members(v, 73, 4, 3)) {
      if (!point_leq(x.point, y.point)) continue;
      Point yx = coordinate(v, x, y);
      LatticePoint acc = x;
      for (int e = 0; e < v.ground().size(); ++e) {
        if (yx[e] == 0) continue;
        Ray r = trace_ray(v, x, e, static_cast<int>(yx[e]));
        acc = join(v, acc, certify(v, r.points.back()));
      }
      CHECK(acc.point == y.point);
    }
  }
}

TEST_CASE("raise joins ray points and certifies a base") {
  Valuation u = fixture_u23();
  LatticePoint zero = certify(u, {0, 0, 0});
  auto [y, b] = raise(u, zero, {1, 1, 0});
  CHECK(y.point == Point{1, 1, 1});
  CHECK(b == S({0, 1}));

  auto [y0, b0] = raise(u, zero, {0, 0, 0});
  CHECK(y0.point == zero.point);
  CHECK(u.family().contains(b0));

  Valuation rep = fixture_rep23();
  LatticePoint x = certify(rep, {0, 1, 0});
  auto [y2, b2] = raise(rep, x, {0, 1, 0});
  CHECK(y2.point == Point{0, 2, 0});
  CHECK(b2 == S({0, 1}));
}

TEST_CASE("raised coordinates match on the returned base") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    LatticePoint x = find_point(v);
    std::mt19937 rng(79);
    for (int trial = 0; trial < 3; ++trial) {
      Point c(v.ground().size());
      for (auto& value : c) value = static_cast<long long>(rng() % 3);
      auto [y, b] = raise(v, x, c);
      Point yx = coordinate(v, x, y);
      for (int e : subset_indices(b)) CHECK(yx[e] == c[e]);
    }
  }
}

TEST_CASE("matroids at a point and at infinity") {
  Valuation rep = fixture_rep23();
  CHECK(matroid_at(rep, certify(rep, {0, 1, 0})).bases() == rep.family().bases());
  CHECK(matroid_at_infinity(rep) == rep.family());
  CHECK(matroid_at_infinity(fixture_u23()) == fixture_u23().family());
}

TEST_CASE("matroid at infinity across the simple corpus") {
  for (const auto& inst : simple_corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    BaseFamily inf = matroid_at_infinity(v);
    CHECK(inf == v.family());
    CHECK(is_base_family(inf));
  }
}
