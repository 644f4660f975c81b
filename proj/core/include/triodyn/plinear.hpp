#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "triodyn/pattern.hpp"
#include "triodyn/rational.hpp"

namespace triodyn {

// A point of the triod: a branch and a positive distance from the branching
// point, or the branching point itself.
struct TriodCoord {
  static constexpr int kCenter = -1;

  int branch = kCenter;
  Rational distance;

  static TriodCoord center() { return {}; }
  // Throws std::invalid_argument unless distance > 0 and branch in 0..2.
  static TriodCoord on(int branch, Rational distance);

  bool is_center() const { return branch == kCenter; }

  friend bool operator==(const TriodCoord& a, const TriodCoord& b) {
    return a.branch == b.branch && a.distance == b.distance;
  }
};

std::string to_string(const TriodCoord& x);

enum class Embedding {
  rank,          // rank r sits at distance r
  rank_squared,  // rank r sits at distance r + r^2
};

// The P-linear map of a pattern on a concrete embedding of its points.
class PLinearMap {
 public:
  PLinearMap(Pattern pattern, std::vector<Rational> distances);

  const Pattern& pattern() const { return pattern_; }
  const Rational& distance(int id) const { return distance_[id]; }
  TriodCoord coord(int id) const { return {pattern_.branch_of(id), distance_[id]}; }
  int image(int id) const { return pattern_.successor(id); }
  // Distance of the outermost point on the branch; zero for an empty branch.
  const Rational& hull_extent(int branch) const { return extent_[branch]; }

 private:
  Pattern pattern_;
  std::vector<Rational> distance_;
  std::array<Rational, kBranches> extent_;
};

PLinearMap embed(const Pattern& p, Embedding embedding = Embedding::rank);

// Exact image under the P-linear map.
TriodCoord eval(const PLinearMap& f, const TriodCoord& x);

// A component of [P] minus P and the branching point. The outer endpoint is
// the pattern point of the given rank; lo == 0 encodes the branching point.
struct BasicInterval {
  int branch = 0;
  int rank = 1;
  Rational lo;
  Rational hi;
};

// One interval per point, in point-id order: interval v has point v as its
// outer endpoint. The count therefore equals the period.
std::vector<BasicInterval> basic_intervals(const PLinearMap& f);

// Where the image path of an interval crosses a basic interval. `outward`
// is set when the path runs from the interval's inner to its outer endpoint.
struct PathStep {
  int target = 0;
  bool outward = true;
};

// Covering graph on basic intervals: I -> J iff J lies on f(I).
struct MarkovGraph {
  std::vector<BasicInterval> vertices;
  // Path from f(inner endpoint) to f(outer endpoint), one step per interval.
  std::vector<std::vector<PathStep>> image_path;
  // Sorted successor lists.
  std::vector<std::vector<int>> out;

  int size() const { return static_cast<int>(vertices.size()); }
  bool has_edge(int from, int to) const;
  // Position of `to` along the image path of `from`, or -1.
  int step_index(int from, int to) const { return step_pos_[from * size() + to]; }

  void index_steps();

 private:
  std::vector<int> step_pos_;
};

MarkovGraph covering_graph(const PLinearMap& f);

struct Arrow {
  int source = 0;
  int target = 0;
  ArrowColor color = ArrowColor::green;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// The oriented point graph with displacement-colored arrows.
struct ColoredGraph {
  int vertex_count = 0;
  std::vector<Arrow> arrows;              // sorted by (source, target)
  std::vector<std::vector<Arrow>> out;    // per source, sorted by target

  bool has_arrow(int x, int y) const;
};

// Combinatorial construction: x -> y iff some point z on x's branch with
// rank(z) <= rank(x) has f(z) on y's branch with rank(f(z)) >= rank(y).
ColoredGraph point_graph(const Pattern& p);
// Geometric construction from exact evaluation: x -> y iff [a, y] lies in
// f([a, x]).
ColoredGraph point_graph_from_map(const PLinearMap& f);

struct PeriodicOrbit {
  std::vector<TriodCoord> points;  // x_0, f(x_0), ..., one full loop
  int minimal_period = 0;
};

// Periodic point whose orbit follows the given loop of basic intervals
// (vertex indices into covering_graph(f)). Throws Error{NotALoop} if the
// sequence is not a loop and Error{DegenerateToEndpoint} when the orbit
// collapses onto P or the branching point.
PeriodicOrbit orbit_for_itinerary(const PLinearMap& f, std::span<const int> loop);

// Throws Error{CoincidentPoints} for repeated points, the branching point,
// or an empty orbit.
Pattern pattern_of_orbit(std::span<const TriodCoord> orbit);

// ---------------------------------------------------------------------------
// Loop enumeration and forced patterns.

// Calls `visit` once per primitive loop of length <= max_length, presented in
// its least lexicographic rotation. Repetitions of shorter loops are skipped.
void for_each_primitive_loop(const MarkovGraph& g, int max_length,
                             const std::function<void(std::span<const int>)>& visit);

// Patterns of the periodic orbits following a primitive loop, computed with
// exact integer arithmetic over the rank embedding.
struct LoopOrbits {
  // Orbit with the loop as itinerary; empty when it collapses onto P.
  std::optional<Pattern> single;
  // Orbits of twice the loop length; present only when f^len reverses the
  // first interval onto itself.
  std::optional<Pattern> doubled;
};
// `g` must be covering_graph(embed(p, Embedding::rank)).
LoopOrbits loop_orbits(const MarkovGraph& g, std::span<const int> loop, bool want_doubled = true);

// Distinct patterns of period <= max_period exhibited by cycles of the
// P-linear map, sorted; includes p itself when its period fits.
std::vector<Pattern> forced_patterns(const Pattern& p, int max_period);
// Same set computed through exact rational pullbacks on an arbitrary
// embedding. Slower; used to cross-check embedding independence.
std::vector<Pattern> forced_patterns(const PLinearMap& f, int max_period);

}  // namespace triodyn
