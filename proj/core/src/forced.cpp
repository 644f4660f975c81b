// Loop enumeration over the covering graph and the integer orbit kernel used
// for forced-pattern computation on the rank embedding.
#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>

#include "triodyn/plinear.hpp"

namespace triodyn {

namespace {

// Shortest distance from every vertex >= s to s inside the subgraph induced
// by vertices >= s; -1 when unreachable.
std::vector<int> distances_to(const MarkovGraph& g, int s, const std::vector<std::vector<int>>& rev) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : rev[v]) {
      if (u < s || dist[u] >= 0) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

class LyndonWalks {
 public:
  LyndonWalks(const MarkovGraph& g, int max_len, const std::function<void(std::span<const int>)>& visit)
      : g_(g), max_len_(max_len), visit_(visit), word_(max_len + 1) {}

  void run(int start, std::vector<int> dist) {
    dist_ = std::move(dist);
    word_[1] = start;
    extend(1, 1);
  }

 private:
  // word_[1..t] is a prenecklace walk with period p (Fredricksen-Kessler-Maiorana).
  void extend(int t, int p) {
    const int s = word_[1];
    const int last = word_[t];
    if (p == t && g_.has_edge(last, s)) visit_(std::span<const int>(word_.data() + 1, t));
    if (t == max_len_) return;
    const int floor = word_[t + 1 - p];
    for (int next : g_.out[last]) {
      if (next < floor) continue;
      if (dist_[next] < 0 || t + dist_[next] > max_len_) continue;
      word_[t + 1] = next;
      extend(t + 1, next == floor ? p : t + 1);
    }
  }

  const MarkovGraph& g_;
  int max_len_;
  const std::function<void(std::span<const int>)>& visit_;
  std::vector<int> word_;  // 1-based
  std::vector<int> dist_;
};

}  // namespace

void for_each_primitive_loop(const MarkovGraph& g, int max_length,
                             const std::function<void(std::span<const int>)>& visit) {
  if (max_length < 1) return;
  std::vector<std::vector<int>> rev(g.size());
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.out[v]) rev[w].push_back(v);
  }
  LyndonWalks walks(g, max_length, visit);
  for (int s = 0; s < g.size(); ++s) walks.run(s, distances_to(g, s, rev));
}

namespace {

struct LoopStep {
  int vertex;
  std::int64_t c;  // image-path length of the vertex interval
  std::int64_t j;  // position of the next vertex along that path
  bool outward;
};

template <typename Int>
Pattern build_pattern(const MarkovGraph& g, const std::vector<LoopStep>& steps, const Int& q, Int n,
                      std::size_t count) {
  // Rank embedding: interval v is (rank-1, rank) on its branch and the
  // orbit point sits at offset n/q inside it.
  struct Point {
    int branch;
    int rank;
    Int num;
    std::size_t index;
  };
  std::vector<Point> pts;
  pts.reserve(count);
  const std::size_t len = steps.size();
  for (std::size_t i = 0; i < count; ++i) {
    const LoopStep& st = steps[i % len];
    const BasicInterval& iv = g.vertices[st.vertex];
    pts.push_back({iv.branch, iv.rank, n, i});
    n = st.outward ? Int(st.c * n - st.j * q) : Int((st.j + 1) * q - st.c * n);
  }
  std::vector<Point> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    if (a.branch != b.branch) return a.branch < b.branch;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.num < b.num;
  });
  std::array<int, kBranches> counts{};
  std::vector<int> id_of_index(count);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    ++counts[sorted[k].branch];
    id_of_index[sorted[k].index] = static_cast<int>(k);
  }
  std::vector<int> succ(count);
  for (std::size_t i = 0; i < count; ++i) succ[id_of_index[i]] = id_of_index[(i + 1) % count];
  return Pattern::create(counts, std::move(succ));
}

template <typename Int>
LoopOrbits solve(const MarkovGraph& g, const std::vector<LoopStep>& steps, bool want_doubled) {
  // Compose the inverse branches x = (alpha*y + beta) / d from the back.
  Int alpha = 1;
  Int beta = 0;
  Int d = 1;
  for (std::size_t k = steps.size(); k-- > 0;) {
    const LoopStep& st = steps[k];
    if (st.outward) {
      beta += Int(st.j) * d;
    } else {
      alpha = -alpha;
      beta = Int(st.j + 1) * d - beta;
    }
    d *= Int(st.c);
  }
  LoopOrbits out;
  const std::size_t len = steps.size();
  if (d == 1 && alpha == 1) {
    out.single = build_pattern<Int>(g, steps, Int(2), Int(1), len);
    return out;
  }
  const Int q = d - alpha;
  if (beta != 0 && beta != q) out.single = build_pattern<Int>(g, steps, q, beta, len);
  if (want_doubled && d == 1 && alpha == -1) {
    out.doubled = build_pattern<Int>(g, steps, Int(4), Int(1), 2 * len);
  }
  return out;
}

}  // namespace

LoopOrbits loop_orbits(const MarkovGraph& g, std::span<const int> loop, bool want_doubled) {
  std::vector<LoopStep> steps;
  steps.reserve(loop.size());
  long double product = 1;
  std::int64_t max_c = 1;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const int v = loop[i];
    const int w = loop[(i + 1) % loop.size()];
    const int pos = g.step_index(v, w);
    const auto c = static_cast<std::int64_t>(g.image_path[v].size());
    steps.push_back({v, c, pos, g.image_path[v][pos].outward});
    product *= static_cast<long double>(c);
    max_c = std::max(max_c, c);
  }
  // Numerators stay below (c+1) * 2 * prod(c); fall back to GMP beyond int64.
  const long double limit = static_cast<long double>(std::numeric_limits<std::int64_t>::max()) / 4;
  if (product * static_cast<long double>(max_c + 2) < limit) {
    return solve<std::int64_t>(g, steps, want_doubled);
  }
  return solve<mpz_class>(g, steps, want_doubled);
}

std::vector<Pattern> forced_patterns(const Pattern& p, int max_period) {
  const MarkovGraph g = covering_graph(embed(p));
  std::set<Pattern> found;
  if (p.period() <= max_period) found.insert(p);
  for_each_primitive_loop(g, max_period, [&](std::span<const int> loop) {
    LoopOrbits orbits = loop_orbits(g, loop, 2 * static_cast<int>(loop.size()) <= max_period);
    if (orbits.single) found.insert(*std::move(orbits.single));
    if (orbits.doubled) found.insert(*std::move(orbits.doubled));
  });
  return {found.begin(), found.end()};
}

}  // namespace triodyn
