#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "valmat/errors.hpp"
#include "valmat/tropical.hpp"

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

RationalPoint RP(std::initializer_list<Rat> values) { return RationalPoint(values); }

}  // namespace

TEST_CASE("membership by the loop-free criterion") {
  Valuation rep = fixture_rep23();
  CHECK(is_member(rep, {0, 1, 0}));
  CHECK(!is_member(rep, {0, 0, 0}));
  CHECK(!is_member(fixture_u23(), {1, 1, 0}));
}

TEST_CASE("membership by the twice-attained criterion") {
  Valuation rep = fixture_rep23();
  CHECK(is_member_tw(rep, to_rational({0, 1, 0})));
  CHECK(!is_member_tw(rep, to_rational({0, 0, 0})));
  CHECK(!is_member_tw(fixture_u23(), RP({Rat(1, 2), Rat(1, 2), Rat(0)})));
  CHECK(is_member_tw(fixture_u23(), RP({Rat(1, 2), Rat(1, 2), Rat(1, 2)})));
}

TEST_CASE("free matroids fill the whole space") {
  GroundSet g({"e1", "e2"});
  Valuation free2 = make_valuation(g, 2, {{S({0, 1}), 0}});
  CHECK(is_member(free2, {5, -7}));
  CHECK(is_member_tw(free2, RP({Rat(1, 3), Rat(-9, 2)})));
}

TEST_CASE("both definitions agree on integer boxes") {
  for (const Valuation& v : {fixture_u23(), fixture_rep23(), fixture_tree()}) {
    Point p(v.ground().size(), -1);
    for (;;) {
      oracle::brute_member_cross(v, p);  // throws on disagreement
      std::size_t i = 0;
      while (i < p.size() && p[i] == 1) p[i] = -1, ++i;
      if (i == p.size()) break;
      ++p[i];
    }
  }
}

TEST_CASE("floor of a rational member") {
  Valuation rep = fixture_rep23();
  CHECK(floor_point(rep, to_rational({0, 1, 0})) == Point{0, 1, 0});
  CHECK(floor_point(fixture_u23(), RP({Rat(1, 2), Rat(1, 2), Rat(1, 2)})) ==
        Point{0, 0, 0});
  CHECK(floor_point(rep, RP({Rat(1, 3), Rat(4, 3), Rat(1, 3)})) == Point{0, 1, 0});
  CHECK_THROWS_AS(floor_point(rep, to_rational({0, 0, 0})), domain_error);
}

TEST_CASE("flat chain decomposition") {
  FlatChainDecomposition d =
      decompose(fixture_u23(), RP({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(d.base == Point{0, 0, 0});
  REQUIRE(d.chain.size() == 1);
  CHECK(d.chain[0].first == S({0, 1, 2}));
  CHECK(d.chain[0].second == Rat(1, 2));

  FlatChainDecomposition whole = decompose(fixture_rep23(), to_rational({0, 1, 0}));
  CHECK(whole.base == Point{0, 1, 0});
  CHECK(whole.chain.empty());

  FlatChainDecomposition third =
      decompose(fixture_rep23(), RP({Rat(1, 3), Rat(4, 3), Rat(1, 3)}));
  CHECK(third.base == Point{0, 1, 0});
  REQUIRE(third.chain.size() == 1);
  CHECK(third.chain[0].first == S({0, 1, 2}));
  CHECK(third.chain[0].second == Rat(1, 3));
}

TEST_CASE("decomposition reconstructs the point with nested positive chain") {
  // Rational members built as base + sum of scaled flat indicators.
  std::mt19937 rng(5);
  for (const auto& inst : corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    if (v.ground().size() > 5) continue;
    CAPTURE(name);
    for (const LatticePoint& base : sample_members(v, 11, 3, 3)) {
      auto flats = maximizer_family(v, base.point).flats();
      RationalPoint x = to_rational(base.point);
      Rat budget(9, 10);
      // Random nested subchain of the flats lattice.
      Subset prev = kEmptySubset;
      for (Subset f : flats) {
        if (f == kEmptySubset || !subset_of(prev, f)) continue;
        if (rng() % 2 == 0) continue;
        Rat coeff = budget / Rat(4);
        budget -= coeff;
        for (int e : subset_indices(f)) x[e] += coeff;
        prev = f;
      }
      FlatChainDecomposition d = decompose(v, x);
      RationalPoint rebuilt = to_rational(d.base);
      Rat total(0);
      Subset previous = kEmptySubset;
      for (const auto& [flat, coeff] : d.chain) {
        CHECK(coeff > Rat(0));
        CHECK(subset_of(previous, flat));
        CHECK(previous != flat);
        previous = flat;
        total += coeff;
        for (int e : subset_indices(flat)) rebuilt[e] += coeff;
      }
      CHECK(total < Rat(1));
      CHECK(rebuilt == x);
    }
  }
}

TEST_CASE("tropical minimum of members") {
  Valuation u = fixture_u23();
  CHECK(trop_min(u, {1, 0, 0}, {0, 1, 0}) == Point{0, 0, 0});
  CHECK(trop_min(u, {1, 0, 0}, {1, 0, 0}) == Point{1, 0, 0});
  CHECK(trop_min(fixture_rep23(), {0, 1, 0}, {1, 1, 0}) == Point{0, 1, 0});
  CHECK_THROWS_AS(trop_min(fixture_rep23(), {0, 0, 0}, {0, 1, 0}), domain_error);
}

TEST_CASE("members are closed under all-one shifts") {
  for (const auto& inst : corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    for (const LatticePoint& p : sample_members(v, 3, 3, 3)) {
      for (long long k = -3; k <= 3; ++k) {
        Point shiftedp = p.point;
        for (auto& c : shiftedp) c += k;
        CHECK(is_member(v, shiftedp));
      }
    }
  }
}

TEST_CASE("members are closed under componentwise minimum") {
  for (const auto& inst : corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    CAPTURE(name);
    auto pts = sample_members(v, 17, 8, 4);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
      CHECK(is_member(v, point_min(pts[i].point, pts[i + 1].point)));
  }
}

TEST_CASE("maximizers with maximal overlap survive a flat shift") {
  // For members x and any subset F, a maximizer of v + x with maximal
  // intersection with F stays a maximizer of v + x + 1_F.
  for (const auto& inst : corpus()) {
    const std::string& name = inst.name;
    const Valuation& v = inst.v;
    if (v.ground().size() > 5) continue;
    CAPTURE(name);
    for (const LatticePoint& p : sample_members(v, 23, 2, 3)) {
      const BaseFamily& local = p.local;
      for (Subset f = 0; f <= v.ground().full(); ++f) {
        Point shiftedp = add_indicator(p.point, f);
        BaseFamily after = maximizer_family(v, shiftedp);
        int best_overlap = 0;
        for (Subset b : local.bases())
          best_overlap = std::max(best_overlap, subset_size(b & f));
        for (Subset b : local.bases())
          if (subset_size(b & f) == best_overlap) CHECK(after.contains(b));
      }
    }
  }
}

TEST_CASE("the twice-attained check respects its caps") {
  std::vector<std::string> labels;
  for (int i = 0; i < 22; ++i) labels.push_back("x" + std::to_string(i));
  Subset base = bit(0) | bit(1);
  Valuation big = make_valuation(GroundSet(labels), 2, {{base, 0}});
  CHECK_THROWS_AS(is_member_tw(big, RationalPoint(22, Rat(0))), domain_error);
}

TEST_CASE("tight span projection and fixpoint") {
  Valuation tree = fixture_tree();
  RationalPoint p0 = tight_span_point(tree, {0, 0, 0});
  CHECK(p0 == RP({Rat(0), Rat(0), Rat(0)}));

  RationalPoint p = tight_span_point(fixture_rep23(), {0, 1, 0});
  CHECK(p == RP({Rat(1, 2), Rat(-1, 2), Rat(1, 2)}));
  CHECK(is_tight_span_point(fixture_rep23(), p));

  CHECK(tight_span_point(fixture_u23(), {0, 0, 0}) == RP({Rat(0), Rat(0), Rat(0)}));

  CHECK_THROWS_AS(tight_span_point(fixture_rep23(), {0, 0, 0}), domain_error);
  CHECK(!is_tight_span_point(fixture_rep23(), RP({Rat(5), Rat(5), Rat(5)})));
}
