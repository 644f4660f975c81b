#include "triodyn/plinear.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "triodyn/error.hpp"

namespace triodyn {

TriodCoord TriodCoord::on(int branch, Rational distance) {
  if (branch < 0 || branch >= kBranches) throw std::invalid_argument("branch must be 0..2");
  if (sgn(distance) <= 0) throw std::invalid_argument("distance must be positive off the center");
  return {branch, std::move(distance)};
}

std::string to_string(const TriodCoord& x) {
  if (x.is_center()) return "a";
  return "b" + std::to_string(x.branch) + ":" + x.distance.get_str();
}

PLinearMap::PLinearMap(Pattern pattern, std::vector<Rational> distances)
    : pattern_(std::move(pattern)), distance_(std::move(distances)) {
  if (static_cast<int>(distance_.size()) != pattern_.period()) {
    throw std::invalid_argument("one distance per pattern point required");
  }
  for (int b = 0; b < kBranches; ++b) {
    Rational prev = 0;
    for (int r = 1; r <= pattern_.count(b); ++r) {
      const Rational& d = distance_[pattern_.id_of(b, r)];
      if (d <= prev) throw std::invalid_argument("distances must increase with rank");
      prev = d;
    }
    extent_[b] = prev;
  }
}

PLinearMap embed(const Pattern& p, Embedding embedding) {
  std::vector<Rational> dist(p.period());
  for (int id = 0; id < p.period(); ++id) {
    const long r = p.rank_of(id);
    dist[id] = embedding == Embedding::rank ? Rational(r) : Rational(r + r * r);
  }
  return PLinearMap(p, std::move(dist));
}

namespace {

// Point of the path from u to w at path-length `pos` from u.
TriodCoord along_path(const TriodCoord& u, const TriodCoord& w, const Rational& pos) {
  if (u.is_center()) {
    if (sgn(pos) == 0) return TriodCoord::center();
    return {w.branch, pos};
  }
  if (u.branch == w.branch) {
    const Rational d = w.distance >= u.distance ? Rational(u.distance + pos) : Rational(u.distance - pos);
    return {u.branch, d};
  }
  if (pos < u.distance) return {u.branch, u.distance - pos};
  if (pos == u.distance) return TriodCoord::center();
  return {w.branch, pos - u.distance};
}

Rational path_length(const TriodCoord& u, const TriodCoord& w) {
  if (u.is_center()) return w.distance;
  if (u.branch == w.branch) return abs(w.distance - u.distance);
  return u.distance + w.distance;
}

}  // namespace

TriodCoord eval(const PLinearMap& f, const TriodCoord& x) {
  if (x.is_center()) return TriodCoord::center();
  const Pattern& p = f.pattern();
  const int b = x.branch;
  const int k = p.count(b);
  if (k == 0) return TriodCoord::center();  // constant off the hull, equal to f(a)
  if (x.distance >= f.hull_extent(b)) return f.coord(f.image(p.id_of(b, k)));
  // Locate the basic interval (lo, hi] containing x.
  int rank = 1;
  while (f.distance(p.id_of(b, rank)) < x.distance) ++rank;
  const int outer = p.id_of(b, rank);
  if (f.distance(outer) == x.distance) return f.coord(f.image(outer));
  const Rational lo = rank == 1 ? Rational(0) : f.distance(outer - 1);
  const TriodCoord u = rank == 1 ? TriodCoord::center() : f.coord(f.image(outer - 1));
  const TriodCoord w = f.coord(f.image(outer));
  const Rational s = (x.distance - lo) / (f.distance(outer) - lo);
  return along_path(u, w, s * path_length(u, w));
}

std::vector<BasicInterval> basic_intervals(const PLinearMap& f) {
  const Pattern& p = f.pattern();
  std::vector<BasicInterval> out;
  out.reserve(p.period());
  for (int id = 0; id < p.period(); ++id) {
    BasicInterval iv;
    iv.branch = p.branch_of(id);
    iv.rank = p.rank_of(id);
    iv.lo = iv.rank == 1 ? Rational(0) : f.distance(id - 1);
    iv.hi = f.distance(id);
    out.push_back(std::move(iv));
  }
  return out;
}

bool MarkovGraph::has_edge(int from, int to) const { return step_index(from, to) >= 0; }

void MarkovGraph::index_steps() {
  const int n = size();
  step_pos_.assign(static_cast<std::size_t>(n) * n, -1);
  out.assign(n, {});
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(image_path[v].size()); ++i) {
      step_pos_[v * n + image_path[v][i].target] = i;
      out[v].push_back(image_path[v][i].target);
    }
    std::sort(out[v].begin(), out[v].end());
  }
}

MarkovGraph covering_graph(const PLinearMap& f) {
  const Pattern& p = f.pattern();
  MarkovGraph g;
  g.vertices = basic_intervals(f);
  g.image_path.resize(p.period());
  for (int v = 0; v < p.period(); ++v) {
    std::vector<PathStep>& path = g.image_path[v];
    const int w = p.successor(v);
    const int bw = p.branch_of(w);
    const int rw = p.rank_of(w);
    auto outward_to = [&](int from_rank) {
      for (int r = from_rank + 1; r <= rw; ++r) path.push_back({p.id_of(bw, r), true});
    };
    if (p.rank_of(v) == 1) {
      outward_to(0);
      continue;
    }
    const int u = p.successor(v - 1);
    const int bu = p.branch_of(u);
    const int ru = p.rank_of(u);
    if (bu == bw && ru < rw) {
      outward_to(ru);
    } else if (bu == bw) {
      for (int r = ru; r > rw; --r) path.push_back({p.id_of(bu, r), false});
    } else {
      for (int r = ru; r >= 1; --r) path.push_back({p.id_of(bu, r), false});
      outward_to(0);
    }
  }
  g.index_steps();
  return g;
}

bool ColoredGraph::has_arrow(int x, int y) const {
  const auto& row = out[x];
  return std::binary_search(row.begin(), row.end(), Arrow{x, y, ArrowColor::green},
                            [](const Arrow& a, const Arrow& b) { return a.target < b.target; });
}

namespace {

ColoredGraph graph_from_reach(const Pattern& p, const std::vector<std::array<Rational, kBranches>>& reach,
                              const std::function<Rational(int)>& dist) {
  ColoredGraph g;
  g.vertex_count = p.period();
  g.out.resize(p.period());
  for (int x = 0; x < p.period(); ++x) {
    for (int y = 0; y < p.period(); ++y) {
      if (reach[x][p.branch_of(y)] >= dist(y)) {
        Arrow a{x, y, color_of_displacement(branch_advance(p.branch_of(x), p.branch_of(y)))};
        g.arrows.push_back(a);
        g.out[x].push_back(a);
      }
    }
  }
  return g;
}

}  // namespace

ColoredGraph point_graph(const Pattern& p) {
  // reach[x][b]: largest rank on branch b among images of points z <= x.
  std::vector<std::array<Rational, kBranches>> reach(p.period());
  for (int b = 0; b < kBranches; ++b) {
    std::array<Rational, kBranches> acc{};
    for (int r = 1; r <= p.count(b); ++r) {
      const int z = p.id_of(b, r);
      const int fz = p.successor(z);
      acc[p.branch_of(fz)] = std::max(acc[p.branch_of(fz)], Rational(p.rank_of(fz)));
      reach[z] = acc;
    }
  }
  return graph_from_reach(p, reach, [&](int y) { return Rational(p.rank_of(y)); });
}

ColoredGraph point_graph_from_map(const PLinearMap& f) {
  const Pattern& p = f.pattern();
  // f([a, x]) is the union of the image paths of the basic intervals inside
  // [a, x]; record how far it extends along each branch.
  std::vector<std::array<Rational, kBranches>> reach(p.period());
  for (int b = 0; b < kBranches; ++b) {
    std::array<Rational, kBranches> acc{};
    for (int r = 1; r <= p.count(b); ++r) {
      // f is monotone on each basic interval, so its image is the geodesic
      // between the endpoint images and reaches furthest at an endpoint.
      const TriodCoord w = eval(f, f.coord(p.id_of(b, r)));
      if (!w.is_center()) acc[w.branch] = std::max(acc[w.branch], w.distance);
      reach[p.id_of(b, r)] = acc;
    }
  }
  return graph_from_reach(p, reach, [&](int y) { return f.distance(y); });
}

namespace {

struct Affine {
  Rational slope = 1;
  Rational offset = 0;
  Rational operator()(const Rational& y) const { return slope * y + offset; }
};

void require_loop(const MarkovGraph& g, std::span<const int> loop) {
  if (loop.empty()) throw Error(ErrorCode::NotALoop, "empty itinerary");
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const int v = loop[i];
    const int w = loop[(i + 1) % loop.size()];
    if (v < 0 || v >= g.size() || w < 0 || w >= g.size() || !g.has_edge(v, w)) {
      throw Error(ErrorCode::NotALoop, "interval " + std::to_string(v) + " does not cover interval " +
                                           std::to_string(w));
    }
  }
}

// Inverse branch of f restricted to the part of `from` mapping onto `to`,
// as an affine map of distances.
Affine inverse_step(const MarkovGraph& g, int from, int to) {
  const BasicInterval& iv = g.vertices[from];
  Rational total = 0;
  Rational offset = 0;
  const PathStep* step = nullptr;
  for (const PathStep& s : g.image_path[from]) {
    const BasicInterval& j = g.vertices[s.target];
    if (s.target == to) {
      step = &s;
      offset = total;
    }
    total += j.hi - j.lo;
  }
  const BasicInterval& j = g.vertices[to];
  const Rational scale = (iv.hi - iv.lo) / total;
  // position along the path: outward (y - lo_J) + o, inward (hi_J - y) + o
  Affine a;
  if (step->outward) {
    a.slope = scale;
    a.offset = iv.lo + (offset - j.lo) * scale;
  } else {
    a.slope = -scale;
    a.offset = iv.lo + (offset + j.hi) * scale;
  }
  return a;
}

Affine compose_pullback(const MarkovGraph& g, std::span<const int> loop) {
  Affine acc;  // identity
  const std::size_t n = loop.size();
  for (std::size_t k = n; k-- > 0;) {
    const Affine step = inverse_step(g, loop[k], loop[(k + 1) % n]);
    acc = Affine{step.slope * acc.slope, step.slope * acc.offset + step.offset};
  }
  return acc;
}

bool in_closure(const BasicInterval& iv, const TriodCoord& x) {
  if (x.is_center()) return iv.rank == 1;
  return x.branch == iv.branch && x.distance >= iv.lo && x.distance <= iv.hi;
}

std::vector<TriodCoord> iterate(const PLinearMap& f, TriodCoord x, std::size_t steps) {
  std::vector<TriodCoord> pts;
  pts.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    pts.push_back(x);
    x = eval(f, x);
  }
  if (!(x == pts.front())) throw std::logic_error("pullback point is not periodic");
  return pts;
}

}  // namespace

PeriodicOrbit orbit_for_itinerary(const PLinearMap& f, std::span<const int> loop) {
  const MarkovGraph g = covering_graph(f);
  require_loop(g, loop);
  const BasicInterval& first = g.vertices[loop[0]];
  const Affine pull = compose_pullback(g, loop);
  Rational x0;
  if (pull.slope == 1) {
    // f^len is the identity on the first interval; all its points share the
    // itinerary, take the midpoint.
    x0 = (first.lo + first.hi) / 2;
  } else {
    x0 = pull.offset / (1 - pull.slope);
  }
  if (x0 == first.lo || x0 == first.hi) {
    throw Error(ErrorCode::DegenerateToEndpoint, "periodic point is an endpoint of a basic interval");
  }
  PeriodicOrbit orbit;
  orbit.points = iterate(f, TriodCoord{first.branch, x0}, loop.size());
  for (std::size_t i = 0; i < loop.size(); ++i) {
    if (!in_closure(g.vertices[loop[i]], orbit.points[i])) {
      throw std::logic_error("orbit leaves its itinerary");
    }
  }
  const int len = static_cast<int>(loop.size());
  orbit.minimal_period = len;
  for (int d = 1; d < len; ++d) {
    if (len % d == 0 && orbit.points[d] == orbit.points[0]) {
      orbit.minimal_period = d;
      break;
    }
  }
  return orbit;
}

Pattern pattern_of_orbit(std::span<const TriodCoord> orbit) {
  const int n = static_cast<int>(orbit.size());
  if (n == 0) throw Error(ErrorCode::CoincidentPoints, "empty orbit");
  std::array<std::vector<int>, kBranches> on_branch;
  for (int i = 0; i < n; ++i) {
    if (orbit[i].is_center()) throw Error(ErrorCode::CoincidentPoints, "orbit passes through the branching point");
    on_branch[orbit[i].branch].push_back(i);
  }
  std::vector<int> id_of_index(n);
  std::array<int, kBranches> counts{};
  int next = 0;
  for (int b = 0; b < kBranches; ++b) {
    auto& list = on_branch[b];
    std::sort(list.begin(), list.end(),
              [&](int i, int j) { return orbit[i].distance < orbit[j].distance; });
    for (std::size_t k = 1; k < list.size(); ++k) {
      if (orbit[list[k]].distance == orbit[list[k - 1]].distance) {
        throw Error(ErrorCode::CoincidentPoints, "orbit visits " + to_string(orbit[list[k]]) + " twice");
      }
    }
    counts[b] = static_cast<int>(list.size());
    for (int i : list) id_of_index[i] = next++;
  }
  std::vector<int> succ(n);
  for (int i = 0; i < n; ++i) succ[id_of_index[i]] = id_of_index[(i + 1) % n];
  return Pattern::create(counts, std::move(succ));
}

std::vector<Pattern> forced_patterns(const PLinearMap& f, int max_period) {
  const MarkovGraph g = covering_graph(f);
  std::set<Pattern> found;
  if (f.pattern().period() <= max_period) found.insert(f.pattern());
  for_each_primitive_loop(g, max_period, [&](std::span<const int> loop) {
    try {
      const PeriodicOrbit orbit = orbit_for_itinerary(f, loop);
      found.insert(pattern_of_orbit(orbit.points));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateToEndpoint) throw;
    }
    const std::size_t len = loop.size();
    if (2 * len > static_cast<std::size_t>(max_period)) return;
    if (compose_pullback(g, loop).slope != -1) return;
    // f^len flips the first interval: off-center points have period 2*len.
    const BasicInterval& first = g.vertices[loop[0]];
    const TriodCoord start{first.branch, first.lo + (first.hi - first.lo) / 4};
    found.insert(pattern_of_orbit(iterate(f, start, 2 * len)));
  });
  return {found.begin(), found.end()};
}

}  // namespace triodyn
