#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "triodyn/error.hpp"
#include "triodyn/harness.hpp"
#include "triodyn/plinear.hpp"
#include "triodyn/structure.hpp"

using namespace triodyn;

namespace {

Rational triod_distance(const TriodCoord& u, const TriodCoord& v) {
  if (u.is_center()) return v.is_center() ? Rational(0) : v.distance;
  if (v.is_center()) return u.distance;
  if (u.branch == v.branch) return abs(Rational(u.distance - v.distance));
  return u.distance + v.distance;
}

std::vector<Pattern> all_up_to(int n) {
  std::vector<Pattern> out;
  for (int k = 1; k <= n; ++k) {
    auto b = enumerate_patterns(k);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

using Matrix = std::vector<std::vector<std::uint64_t>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

// Number of primitive closed walks of length L up to rotation, from traces.
std::uint64_t primitive_loop_count(const MarkovGraph& g, int length) {
  const std::size_t n = g.size();
  Matrix a(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (int w : g.out[v]) a[v][w] = 1;
  std::vector<std::uint64_t> trace(length + 1, 0);
  Matrix power = a;
  for (int d = 1; d <= length; ++d) {
    for (std::size_t i = 0; i < n; ++i) trace[d] += power[i][i];
    power = multiply(power, a);
  }
  std::int64_t sum = 0;
  for (int d = 1; d <= length; ++d)
    if (length % d == 0) sum += mobius(length / d) * static_cast<std::int64_t>(trace[d]);
  return static_cast<std::uint64_t>(sum / length);
}

}  // namespace

TEST(Embed, RankDistances) {
  const PLinearMap prim = embed(fixtures::primitive3());
  for (int id = 0; id < 3; ++id) EXPECT_EQ(prim.distance(id), Rational(1));
  const PLinearMap lam = embed(fixtures::lambda29());
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(lam.distance(lam.pattern().id_of(0, r)), Rational(r));
  EXPECT_EQ(lam.hull_extent(1), Rational(2));
  const PLinearMap psi = embed(fixtures::psi25());
  EXPECT_EQ(psi.hull_extent(0), Rational(2));
  EXPECT_EQ(psi.hull_extent(1), Rational(1));
  EXPECT_EQ(psi.hull_extent(2), Rational(2));
  const PLinearMap sq = embed(fixtures::lambda29(), Embedding::rank_squared);
  EXPECT_EQ(sq.distance(sq.pattern().id_of(0, 3)), Rational(12));
}

TEST(Eval, Examples) {
  const PLinearMap prim = embed(fixtures::primitive3());
  EXPECT_EQ(eval(prim, TriodCoord::on(0, Rational(1, 2))), TriodCoord::on(1, Rational(1, 2)));
  EXPECT_EQ(eval(prim, TriodCoord::on(0, Rational(7))), TriodCoord::on(1, Rational(1)));
  EXPECT_TRUE(eval(prim, TriodCoord::center()).is_center());
  const PLinearMap psi = embed(fixtures::psi25());
  EXPECT_TRUE(eval(psi, TriodCoord::on(0, Rational(3, 2))).is_center());
}

TEST(Eval, HitsImagesAndIsLipschitz) {
  for (const Pattern& p : all_up_to(5)) {
    for (Embedding e : {Embedding::rank, Embedding::rank_squared}) {
      const PLinearMap f = embed(p, e);
      for (int id = 0; id < p.period(); ++id) ASSERT_EQ(eval(f, f.coord(id)), f.coord(p.successor(id)));
      // Lipschitz bound from the basic intervals, checked on a grid.
      Rational lip(0);
      for (const BasicInterval& iv : basic_intervals(f)) {
        const TriodCoord lo = iv.lo == 0 ? TriodCoord::center() : TriodCoord::on(iv.branch, iv.lo);
        const TriodCoord hi = TriodCoord::on(iv.branch, iv.hi);
        Rational slope = triod_distance(eval(f, lo), eval(f, hi)) / (iv.hi - iv.lo);
        lip = std::max(lip, slope);
      }
      for (int b = 0; b < kBranches; ++b) {
        const Rational step = (f.hull_extent(b) + 1) / 24;
        TriodCoord prev = TriodCoord::center();
        for (int i = 1; i <= 24; ++i) {
          const TriodCoord x = TriodCoord::on(b, step * i);
          EXPECT_LE(triod_distance(eval(f, prev), eval(f, x)), lip * step) << serialize(p);
          prev = x;
        }
      }
    }
  }
}

TEST(BasicIntervals, CountEqualsPeriod) {
  EXPECT_EQ(basic_intervals(embed(fixtures::primitive3())).size(), 3u);
  EXPECT_EQ(basic_intervals(embed(fixtures::lambda29())).size(), 9u);
  EXPECT_EQ(basic_intervals(embed(fixtures::psi25())).size(), 5u);
  for (const BasicInterval& iv : basic_intervals(embed(fixtures::primitive3()))) EXPECT_EQ(iv.lo, Rational(0));
}

TEST(CoveringGraph, Primitive3) {
  const MarkovGraph g = covering_graph(embed(fixtures::primitive3()));
  int edges = 0;
  for (int v = 0; v < g.size(); ++v) edges += static_cast<int>(g.out[v].size());
  EXPECT_EQ(edges, 3);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(CoveringGraph, Psi25Edges) {
  const Pattern p = fixtures::psi25();
  const MarkovGraph g = covering_graph(embed(p));
  const int p1 = p.id_of(0, 1), p2 = p.id_of(0, 2), q1 = p.id_of(1, 1), r1 = p.id_of(2, 1), r2 = p.id_of(2, 2);
  std::set<std::pair<int, int>> expected = {{p1, q1}, {p2, q1}, {p2, r1}, {q1, r1}, {q1, r2}, {r1, p1}, {r2, p2}};
  std::set<std::pair<int, int>> got;
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.out[v]) got.insert({v, w});
  EXPECT_EQ(got, expected);
}

TEST(PointGraph, MatchesGeometricConstruction) {
  for (const Pattern& p : all_up_to(5)) {
    const ColoredGraph a = point_graph(p);
    const ColoredGraph b = point_graph_from_map(embed(p, Embedding::rank_squared));
    ASSERT_EQ(a.arrows, b.arrows) << serialize(p);
    for (int x = 0; x < p.period(); ++x) EXPECT_TRUE(a.has_arrow(x, p.successor(x)));
  }
}

TEST(PointGraph, Examples) {
  const ColoredGraph prim = point_graph(fixtures::primitive3());
  ASSERT_EQ(prim.arrows.size(), 3u);
  for (const Arrow& a : prim.arrows) EXPECT_EQ(a.color, ArrowColor::black);
  const Pattern l = fixtures::lambda29();
  const ColoredGraph g = point_graph(l);
  EXPECT_TRUE(g.has_arrow(l.id_of(0, 1), l.id_of(1, 1)));
  EXPECT_TRUE(g.has_arrow(l.id_of(1, 1), l.id_of(2, 1)));
  EXPECT_TRUE(g.has_arrow(l.id_of(2, 1), l.id_of(0, 1)));
}

TEST(FundamentalLoop, IntervalsAreCovered) {
  for (const Pattern& p : all_up_to(5)) {
    const MarkovGraph g = covering_graph(embed(p));
    for (int x = 0; x < p.period(); ++x) {
      bool covered = false;
      for (int r = 1; r <= p.rank_of(x) && !covered; ++r) covered = g.has_edge(p.id_of(p.branch_of(x), r), p.successor(x));
      EXPECT_TRUE(covered) << serialize(p) << " point " << x;
    }
  }
}

TEST(Orbit, Primitive3MidpointRule) {
  const PLinearMap f = embed(fixtures::primitive3());
  const std::vector<int> loop = {0, 1, 2};
  const PeriodicOrbit o = orbit_for_itinerary(f, loop);
  EXPECT_EQ(o.minimal_period, 3);
  EXPECT_EQ(o.points[0], TriodCoord::on(0, Rational(1, 2)));
  EXPECT_EQ(pattern_of_orbit(o.points), fixtures::primitive3());
}

TEST(Orbit, Psi25BlackLoopGivesPrimitive3) {
  const Pattern p = fixtures::psi25();
  const PLinearMap f = embed(p);
  const std::vector<int> loop = {p.id_of(2, 2), p.id_of(0, 2), p.id_of(1, 1)};
  const PeriodicOrbit o = orbit_for_itinerary(f, loop);
  EXPECT_EQ(o.minimal_period, 3);
  EXPECT_TRUE(equal_up_to_rotation(pattern_of_orbit(o.points), fixtures::primitive3()));
  // The inner loop r1 -> p1 -> q1 expands by 2 and only fixes the center.
  const std::vector<int> inner = {p.id_of(2, 1), p.id_of(0, 1), p.id_of(1, 1)};
  try {
    orbit_for_itinerary(f, inner);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateToEndpoint);
  }
}

TEST(Orbit, RejectsNonLoops) {
  const Pattern p = fixtures::psi25();
  const std::vector<int> bad = {p.id_of(0, 1), p.id_of(2, 1)};
  try {
    orbit_for_itinerary(embed(p), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotALoop);
  }
}

TEST(Orbit, PatternOfOwnPoints) {
  for (const Pattern& p : {fixtures::lambda29(), fixtures::psi25()}) {
    const PLinearMap f = embed(p);
    std::vector<TriodCoord> orbit;
    int x = 0;
    for (int i = 0; i < p.period(); ++i, x = p.successor(x)) orbit.push_back(f.coord(x));
    EXPECT_EQ(pattern_of_orbit(orbit), p);
  }
  const std::vector<TriodCoord> repeated = {TriodCoord::on(0, Rational(1)), TriodCoord::on(0, Rational(1))};
  try {
    pattern_of_orbit(repeated);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoincidentPoints);
  }
}

TEST(Orbit, EveryPrimitiveLoopOrbitIsPeriodicAndFollowsItinerary) {
  for (const Pattern& p : {fixtures::lambda29(), fixtures::psi25(), fixtures::all_black6()}) {
    const PLinearMap f = embed(p);
    const MarkovGraph g = covering_graph(f);
    int checked = 0;
    for_each_primitive_loop(g, 6, [&](std::span<const int> loop) {
      PeriodicOrbit o;
      try {
        o = orbit_for_itinerary(f, loop);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::DegenerateToEndpoint);
        return;
      }
      ++checked;
      ASSERT_EQ(o.points.size(), loop.size());
      TriodCoord x = o.points[0];
      for (std::size_t i = 0; i < loop.size(); ++i) {
        const BasicInterval& iv = g.vertices[loop[i]];
        ASSERT_FALSE(x.is_center());
        EXPECT_EQ(x.branch, iv.branch);
        EXPECT_GE(x.distance, iv.lo);
        EXPECT_LE(x.distance, iv.hi);
        EXPECT_EQ(x, o.points[i]);
        x = eval(f, x);
      }
      EXPECT_EQ(x, o.points[0]);
    });
    EXPECT_GT(checked, 0);
  }
}

TEST(Loops, PrimitiveLoopCountMatchesTraceFormula) {
  for (const Pattern& p : {fixtures::lambda29(), fixtures::psi25(), fixtures::all_black6()}) {
    const MarkovGraph g = covering_graph(embed(p));
    std::vector<std::uint64_t> count(9, 0);
    std::set<std::vector<int>> seen;
    for_each_primitive_loop(g, 8, [&](std::span<const int> loop) {
      ++count[loop.size()];
      EXPECT_TRUE(seen.insert(std::vector<int>(loop.begin(), loop.end())).second);
      EXPECT_EQ(*std::min_element(loop.begin(), loop.end()), loop[0]);
    });
    for (int len = 1; len <= 8; ++len) EXPECT_EQ(count[len], primitive_loop_count(g, len)) << "length " << len;
  }
}

TEST(Forced, Primitive3ForcesOnlyItself) {
  const auto f = forced_patterns(fixtures::primitive3(), 9);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], fixtures::primitive3());
}

TEST(Forced, Psi25ForcesPrimitive3) {
  const auto f = forced_patterns(fixtures::psi25(), 3);
  EXPECT_NE(std::find(f.begin(), f.end(), fixtures::primitive3()), f.end());
}

TEST(Forced, Lambda29ForcesExactSlow312) {
  bool found = false;
  for (const CycleRecord& c : forced_cycles(fixtures::lambda29(), 12)) {
    found |= c.exact && c.rotation.pair == RotationPair{3, 12} && c.rotation.cls == RotationClass::slow;
  }
  EXPECT_TRUE(found);
}

TEST(Forced, IncludesPatternItself) {
  const auto f = forced_patterns(fixtures::lambda29(), 9);
  EXPECT_NE(std::find(f.begin(), f.end(), fixtures::lambda29()), f.end());
  EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
}

TEST(Forced, EmbeddingIndependent) {
  std::vector<Pattern> corpus = regular_patterns_up_to(5);
  for (const Pattern& p : enumerate_patterns(4)) corpus.push_back(p);
  corpus.push_back(fixtures::lambda29());
  for (const Pattern& p : corpus) {
    EXPECT_EQ(forced_patterns(p, 7), forced_patterns(embed(p, Embedding::rank_squared), 7)) << serialize(p);
  }
}

TEST(Forced, TransitiveOnSample) {
  for (const Pattern& a : regular_patterns_up_to(5)) {
    const auto fa = forced_patterns(a, 7);
    const std::set<Pattern> sa(fa.begin(), fa.end());
    for (const Pattern& b : fa) {
      for (const Pattern& c : forced_patterns(b, 7)) EXPECT_TRUE(sa.count(c)) << serialize(a) << serialize(b);
    }
  }
}

TEST(Forced, SampledPeriodicPointsAreAllAccountedFor) {
  // Independent of loop enumeration: iterate eval from grid points and keep
  // every orbit that closes up within the cap and avoids P and a.
  constexpr int kCap = 6;
  constexpr int kGrid = 120;
  std::vector<Pattern> corpus = all_up_to(4);
  corpus.push_back(fixtures::psi25());
  corpus.push_back(fixtures::all_black6());
  int found = 0;
  for (const Pattern& p : corpus) {
    const PLinearMap f = embed(p);
    const auto forced = forced_patterns(p, kCap);
    const std::set<Pattern> known(forced.begin(), forced.end());
    for (const BasicInterval& iv : basic_intervals(f)) {
      for (int k = 1; k < kGrid; ++k) {
        const TriodCoord x0 = TriodCoord::on(iv.branch, iv.lo + (iv.hi - iv.lo) * Rational(k, kGrid));
        std::vector<TriodCoord> orbit{x0};
        TriodCoord x = eval(f, x0);
        while (!(x == x0) && static_cast<int>(orbit.size()) < kCap && !x.is_center()) {
          orbit.push_back(x);
          x = eval(f, x);
        }
        if (!(x == x0)) continue;
        bool on_p = false;
        for (const TriodCoord& y : orbit)
          for (int id = 0; id < p.period(); ++id) on_p |= y == f.coord(id);
        if (on_p) continue;
        ++found;
        EXPECT_TRUE(known.count(pattern_of_orbit(orbit))) << serialize(p) << "from " << to_string(x0);
      }
    }
  }
  EXPECT_GT(found, 0);
}
