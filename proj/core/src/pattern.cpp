#include "triodyn/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "triodyn/error.hpp"

namespace triodyn {

const char* to_string(ArrowColor c) {
  switch (c) {
    case ArrowColor::green: return "green";
    case ArrowColor::black: return "black";
    case ArrowColor::red: return "red";
  }
  return "?";
}

const char* to_string(RotationClass c) {
  switch (c) {
    case RotationClass::slow: return "slow";
    case RotationClass::fast: return "fast";
    case RotationClass::ternary: return "ternary";
  }
  return "?";
}

RotationData make_rotation_data(std::int64_t d, std::int64_t n) {
  RotationData r;
  r.pair = {d, n};
  r.number = make_rational(d, n);
  const std::int64_t g = std::gcd(d, n);
  r.mrp.t = r.number;
  r.mrp.m = g == 0 ? n : g;
  if (3 * d < n) {
    r.cls = RotationClass::slow;
  } else if (3 * d > n) {
    r.cls = RotationClass::fast;
  } else {
    r.cls = RotationClass::ternary;
  }
  return r;
}

Pattern::Pattern(std::array<int, kBranches> counts, std::vector<int> successor)
    : counts_(counts), successor_(std::move(successor)) {
  offsets_[0] = 0;
  offsets_[1] = counts_[0];
  offsets_[2] = counts_[0] + counts_[1];
  branch_.resize(successor_.size());
  for (int b = 0; b < kBranches; ++b) {
    for (int r = 0; r < counts_[b]; ++r) branch_[offsets_[b] + r] = static_cast<std::uint8_t>(b);
  }
}

Pattern Pattern::create(std::array<int, kBranches> counts, std::vector<int> successor) {
  const int n = static_cast<int>(successor.size());
  for (int c : counts) {
    if (c < 0) throw Error(ErrorCode::PeriodMismatch, "negative branch count");
  }
  if (n == 0 || counts[0] + counts[1] + counts[2] != n) {
    throw Error(ErrorCode::PeriodMismatch,
                "branch counts sum to " + std::to_string(counts[0] + counts[1] + counts[2]) +
                    " but successor has " + std::to_string(n) + " entries");
  }
  std::vector<char> seen(n, 0);
  for (int s : successor) {
    if (s < 0 || s >= n || seen[s]) {
      throw Error(ErrorCode::NotSingleCycle, "successor is not a permutation");
    }
    seen[s] = 1;
  }
  int steps = 0;
  int x = 0;
  do {
    x = successor[x];
    ++steps;
  } while (x != 0 && steps <= n);
  if (steps != n) {
    throw Error(ErrorCode::NotSingleCycle,
                "successor splits into several cycles (cycle through the first point has length " +
                    std::to_string(steps) + ")");
  }
  return Pattern(counts, std::move(successor));
}

Pattern Pattern::relabel(const std::array<int, kBranches>& perm) const {
  std::array<int, kBranches> counts{};
  for (int b = 0; b < kBranches; ++b) counts[perm[b]] = counts_[b];
  std::array<int, kBranches> offsets{0, counts[0], counts[0] + counts[1]};
  auto new_id = [&](int id) { return offsets[perm[branch_of(id)]] + rank_of(id) - 1; };
  std::vector<int> succ(successor_.size());
  for (int id = 0; id < period(); ++id) succ[new_id(id)] = new_id(successor_[id]);
  return Pattern(counts, std::move(succ));
}

namespace {

std::array<int, kBranches> dihedral(bool reflect, int shift) {
  std::array<int, kBranches> perm{};
  for (int b = 0; b < kBranches; ++b) {
    perm[b] = reflect ? ((shift - b) % 3 + 3) % 3 : (b + shift) % 3;
  }
  return perm;
}

}  // namespace

bool equal_up_to_rotation(const Pattern& a, const Pattern& b) {
  if (a.period() != b.period()) return false;
  for (int s = 0; s < kBranches; ++s) {
    if (a.relabel(dihedral(false, s)) == b) return true;
  }
  return false;
}

Pattern rotation_representative(const Pattern& p) {
  Pattern best = p;
  for (int s = 1; s < kBranches; ++s) {
    Pattern q = p.relabel(dihedral(false, s));
    if (q < best) best = std::move(q);
  }
  return best;
}

std::vector<ArrowColor> colors(const Pattern& p) {
  std::vector<ArrowColor> out(p.period());
  for (int id = 0; id < p.period(); ++id) {
    out[id] = color_of_displacement(branch_advance(p.branch_of(id), p.branch_of(p.successor(id))));
  }
  return out;
}

RotationData rotation_data(const Pattern& p) {
  std::int64_t thirds = 0;
  for (ArrowColor c : colors(p)) thirds += displacement(c);
  // A cycle winds an integer number of times around the branching point.
  return make_rotation_data(thirds / 3, p.period());
}

bool is_order_preserving(const Pattern& p) {
  for (int x = 0; x < p.period(); ++x) {
    for (int y = 0; y < p.period(); ++y) {
      if (p.branch_of(x) != p.branch_of(y) || p.rank_of(x) <= p.rank_of(y)) continue;
      const int fx = p.successor(x);
      const int fy = p.successor(y);
      if (p.branch_of(fx) == p.branch_of(fy) && p.rank_of(fx) < p.rank_of(fy)) return false;
    }
  }
  return true;
}

Canonical canonicalize(const Pattern& p) {
  std::optional<Canonical> best;
  std::string best_text;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int shift = 0; shift < kBranches; ++shift) {
      Pattern q = p.relabel(dihedral(reflect != 0, shift));
      bool ok = true;
      for (int b = 0; b < kBranches && ok; ++b) {
        if (q.count(b) == 0) {
          ok = false;
          break;
        }
        const int nearest = q.id_of(b, 1);
        ok = branch_advance(b, q.branch_of(q.successor(nearest))) == 1;
      }
      if (!ok) continue;
      std::string text = serialize(q);
      if (!best || text < best_text) {
        best_text = std::move(text);
        best = Canonical{std::move(q), reflect ? Orientation::reflected : Orientation::kept, shift};
      }
    }
  }
  if (!best) {
    throw Error(ErrorCode::NoCanonicalOrdering,
                "no branch relabeling makes the three points nearest the branching point black");
  }
  return *std::move(best);
}

Pattern construct_primitive3() { return Pattern::create({1, 1, 1}, {1, 2, 0}); }

namespace {

// Builds a pattern from named per-branch points placed on branch k, k+1, k+2.
class Builder {
 public:
  Builder(int k, std::array<int, kBranches> local_counts) : k_(k) {
    for (int j = 0; j < kBranches; ++j) counts_[(k + j) % 3] = local_counts[j];
    offsets_ = {0, counts_[0], counts_[0] + counts_[1]};
    succ_.assign(counts_[0] + counts_[1] + counts_[2], -1);
  }
  // local branch j in {0,1,2} relative to k, 1-based rank
  int id(int j, int rank) const { return offsets_[(k_ + j) % 3] + rank - 1; }
  void map(int j1, int r1, int j2, int r2) { succ_[id(j1, r1)] = id(j2, r2); }
  Pattern build() { return Pattern::create(counts_, std::move(succ_)); }

 private:
  int k_;
  std::array<int, kBranches> counts_{};
  std::array<int, kBranches> offsets_{};
  std::vector<int> succ_;
};

void check_branch(int k) {
  if (k < 0 || k > 2) throw Error(ErrorCode::InvalidRotation, "branch index must be 0, 1 or 2");
}

}  // namespace

Pattern construct_unimodal_slow(int m, int n, int k) {
  check_branch(k);
  if (m < 1 || n < 4 || std::gcd(m, n) != 1 || 3 * m >= n) {
    throw Error(ErrorCode::InvalidRotation,
                std::to_string(m) + "/" + std::to_string(n) +
                    " is not a reduced slow rotation number with period >= 4");
  }
  const int np = n - 2 * m;
  Builder b(k, {np, m, m});
  for (int i = 1; i <= m; ++i) b.map(0, i, 1, i);           // p_i -> q_i
  for (int j = m + 1; j <= np; ++j) b.map(0, j, 0, j - m);  // green shift
  for (int i = 1; i <= m; ++i) b.map(1, i, 2, i);           // q_i -> r_i
  for (int i = 1; i <= m; ++i) b.map(2, i, 0, n - 3 * m + i);
  return b.build();
}

Pattern construct_unimodal_fast(int u, int v, int k) {
  check_branch(k);
  if (u < 1 || v < 4 || std::gcd(u, v) != 1 || 3 * u <= v || v - 2 * u < 1) {
    throw Error(ErrorCode::InvalidRotation,
                std::to_string(u) + "/" + std::to_string(v) +
                    " is not a reduced rotation number in (1/3, 1/2) with period >= 4");
  }
  const int black = v - 2 * u;
  const int red = 3 * u - v;
  Builder b(k, {u, black, u});
  for (int i = 1; i <= black; ++i) b.map(0, i, 1, i);         // p_i -> q_i
  for (int i = 1; i <= red; ++i) b.map(0, black + i, 2, i);   // red points
  for (int i = 1; i <= black; ++i) b.map(1, i, 2, red + i);   // q_i -> r_{3u-v+i}
  for (int i = 1; i <= u; ++i) b.map(2, i, 0, i);             // r_i -> p_i
  return b.build();
}

}  // namespace triodyn
