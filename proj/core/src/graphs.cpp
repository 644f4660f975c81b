#include "triodyn/graphs.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "triodyn/error.hpp"

namespace triodyn {

Adjacency adjacency_of(const ColoredGraph& g) {
  Adjacency adj(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    for (const Arrow& a : g.out[v]) adj[v].push_back(a.target);
  }
  return adj;
}

Adjacency adjacency_of(const MarkovGraph& g) { return g.out; }

namespace {

const Arrow* find_arrow(const ColoredGraph& g, int x, int y) {
  if (x < 0 || x >= g.vertex_count) return nullptr;
  const auto& row = g.out[x];
  auto it = std::lower_bound(row.begin(), row.end(), y, [](const Arrow& a, int t) { return a.target < t; });
  return it != row.end() && it->target == y ? &*it : nullptr;
}

std::int64_t loop_thirds(const ColoredGraph& g, std::span<const int> loop) {
  if (loop.empty()) throw Error(ErrorCode::NotALoop, "empty loop");
  std::int64_t thirds = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Arrow* a = find_arrow(g, loop[i], loop[(i + 1) % loop.size()]);
    if (!a) {
      throw Error(ErrorCode::NotALoop, "no arrow " + std::to_string(loop[i]) + " -> " +
                                           std::to_string(loop[(i + 1) % loop.size()]));
    }
    thirds += displacement(a->color);
  }
  return thirds;
}

}  // namespace

RotationPair loop_rotation_pair(const ColoredGraph& g, std::span<const int> loop) {
  const std::int64_t thirds = loop_thirds(g, loop);
  if (thirds % 3 != 0) {
    throw Error(ErrorCode::NotALoop, "loop displacement is not a whole number of turns");
  }
  return {thirds / 3, static_cast<std::int64_t>(loop.size())};
}

bool strongly_connected(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return false;
  Adjacency rev(n);
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) rev[w].push_back(v);
  }
  auto reaches_all = [n](const Adjacency& a) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : a[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(adj) && reaches_all(rev);
}

namespace {

// Karp's maximum cycle mean on a strongly connected graph, weights w(x,y).
Rational max_cycle_mean(const ColoredGraph& g, int sign) {
  const int n = g.vertex_count;
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();
  // best[k][v]: heaviest walk of exactly k arrows from vertex 0 to v
  std::vector<std::vector<std::int64_t>> best(n + 1, std::vector<std::int64_t>(n, kNone));
  best[0][0] = 0;
  for (int k = 1; k <= n; ++k) {
    for (int v = 0; v < n; ++v) {
      if (best[k - 1][v] == kNone) continue;
      for (const Arrow& a : g.out[v]) {
        const std::int64_t w = best[k - 1][v] + sign * displacement(a.color);
        best[k][a.target] = std::max(best[k][a.target], w);
      }
    }
  }
  std::optional<Rational> result;
  for (int v = 0; v < n; ++v) {
    if (best[n][v] == kNone) continue;
    std::optional<Rational> worst;
    for (int k = 0; k < n; ++k) {
      if (best[k][v] == kNone) continue;
      Rational mean = make_rational(best[n][v] - best[k][v], n - k);
      if (!worst || mean < *worst) worst = mean;
    }
    if (worst && (!result || *worst > *result)) result = *worst;
  }
  return *result;
}

}  // namespace

RotationInterval rotation_set(const ColoredGraph& g) {
  if (!strongly_connected(adjacency_of(g))) {
    throw Error(ErrorCode::NotStronglyConnected, "point graph is not strongly connected");
  }
  // Weights are stored in thirds of a turn.
  RotationInterval r;
  r.hi = max_cycle_mean(g, 1) / 3;
  r.lo = -max_cycle_mean(g, -1) / 3;
  return r;
}

namespace {

// Strongly connected component of s in the subgraph induced by vertices >= s.
std::vector<char> component_of(const Adjacency& adj, int s) {
  const int n = static_cast<int>(adj.size());
  auto reach = [&](bool reverse) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = s; u < n; ++u) {
        if (seen[u]) continue;
        const bool edge = reverse ? std::binary_search(adj[u].begin(), adj[u].end(), v)
                                  : std::binary_search(adj[v].begin(), adj[v].end(), u);
        if (edge) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return seen;
  };
  std::vector<char> fwd = reach(false);
  const std::vector<char> bwd = reach(true);
  for (int v = 0; v < n; ++v) fwd[v] = fwd[v] && bwd[v];
  return fwd;
}

class Johnson {
 public:
  Johnson(const Adjacency& adj, const std::function<void(std::span<const int>)>& visit)
      : adj_(adj), visit_(visit), blocked_(adj.size()), blocked_by_(adj.size()) {}

  void run() {
    const int n = static_cast<int>(adj_.size());
    for (int s = 0; s < n; ++s) {
      in_comp_ = component_of(adj_, s);
      for (int v = s; v < n; ++v) {
        blocked_[v] = 0;
        blocked_by_[v].clear();
      }
      start_ = s;
      circuit(s);
    }
  }

 private:
  bool circuit(int v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = 1;
    for (int w : adj_[v]) {
      if (w < start_ || !in_comp_[w]) continue;
      if (w == start_) {
        visit_(path_);
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : adj_[v]) {
        if (w < start_ || !in_comp_[w]) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(int u) {
    blocked_[u] = 0;
    std::vector<int> list;
    list.swap(blocked_by_[u]);
    for (int w : list) {
      if (blocked_[w]) unblock(w);
    }
  }

  const Adjacency& adj_;
  const std::function<void(std::span<const int>)>& visit_;
  std::vector<char> blocked_;
  std::vector<std::vector<int>> blocked_by_;
  std::vector<char> in_comp_;
  std::vector<int> path_;
  int start_ = 0;
};

Adjacency sorted_copy(Adjacency adj) {
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

}  // namespace

void elementary_circuits(const Adjacency& adj, const std::function<void(std::span<const int>)>& visit) {
  const Adjacency sorted = sorted_copy(adj);
  Johnson(sorted, visit).run();
}

void elementary_loops(const ColoredGraph& g, const std::function<void(const Loop&)>& visit) {
  elementary_circuits(adjacency_of(g), [&](std::span<const int> c) {
    Loop loop;
    loop.vertices.assign(c.begin(), c.end());
    loop.length = static_cast<int>(c.size());
    loop.total_displacement = loop_rotation_pair(g, c).d;
    visit(loop);
  });
}

std::vector<Loop> elementary_loops(const ColoredGraph& g) {
  std::vector<Loop> out;
  elementary_loops(g, [&](const Loop& l) { out.push_back(l); });
  return out;
}

bool is_primitive(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return false;
  using Matrix = std::vector<std::vector<char>>;
  Matrix a(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) a[v][w] = 1;
  }
  Matrix power = a;
  const int bound = (n - 1) * (n - 1) + 1;
  for (int k = 1; k <= bound; ++k) {
    bool positive = true;
    for (int i = 0; i < n && positive; ++i) {
      for (int j = 0; j < n && positive; ++j) positive = power[i][j] != 0;
    }
    if (positive) return true;
    Matrix next(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int m = 0; m < n; ++m) {
        if (!power[i][m]) continue;
        for (int j = 0; j < n; ++j) next[i][j] |= a[m][j];
      }
    }
    power = std::move(next);
  }
  return false;
}

bool is_primitive(const MarkovGraph& m) { return is_primitive(adjacency_of(m)); }

}  // namespace triodyn
