#include "triodyn/structure.hpp"

#include <algorithm>

#include "triodyn/error.hpp"
#include "triodyn/plinear.hpp"

namespace triodyn {

std::vector<BlockStructure> has_block_structure(const Pattern& p) {
  const int n = p.period();
  std::vector<BlockStructure> out;
  for (int m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    const int q = n / m;
    BlockStructure bs{m, q, {}};
    std::vector<char> used(n, 0);
    bool ok = true;
    for (int start = 0; start < n && ok; ++start) {
      if (used[start]) continue;
      std::vector<int> block;
      int x = start;
      for (int i = 0; i < q; ++i) {
        block.push_back(x);
        used[x] = 1;
        for (int s = 0; s < m; ++s) x = p.successor(x);
      }
      std::sort(block.begin(), block.end());
      // One branch and consecutive ranks; ids are rank-ordered per branch.
      ok = p.branch_of(block.front()) == p.branch_of(block.back()) && block.back() - block.front() == q - 1;
      bs.blocks.push_back(std::move(block));
    }
    if (ok) out.push_back(std::move(bs));
  }
  return out;
}

bool is_admissible(const Pattern& p) {
  for (const Pattern& q : forced_patterns(p, 1)) {
    if (q.period() == 1) return false;
  }
  return true;
}

bool is_regular(const Pattern& p) {
  for (const Pattern& q : forced_patterns(p, 2)) {
    // A forced fixed point off the branching point rules out every map with
    // a as its only fixed point.
    if (q.period() == 1) return false;
    if (q.period() == 2 && q.branch_of(0) != q.branch_of(1)) return false;
  }
  return true;
}

bool is_exact_regular(const Pattern& p) {
  // The primitive 3-cycle has no blocks yet f_P^3 is the identity on [P].
  return p.period() > 3 && has_block_structure(p).empty();
}

bool is_exact(const Pattern& p) {
  if (!is_regular(p)) throw Error(ErrorCode::NotRegular, "exactness is decided for regular patterns only");
  return is_exact_regular(p);
}

CycleRecord make_cycle_record(const Pattern& p) {
  CycleRecord r{p, rotation_data(p), false, is_regular(p)};
  r.exact = r.regular && is_exact_regular(p);
  return r;
}

std::vector<CycleRecord> forced_cycles(const Pattern& p, int max_period) {
  std::vector<CycleRecord> out;
  for (const Pattern& q : forced_patterns(p, max_period)) out.push_back(make_cycle_record(q));
  return out;
}

bool forces(const Pattern& a, const Pattern& b, bool up_to_rotation) {
  for (const Pattern& q : forced_patterns(a, b.period())) {
    if (q.period() != b.period()) continue;
    if (up_to_rotation ? equal_up_to_rotation(q, b) : q == b) return true;
  }
  return false;
}

TwistVerdict is_triod_twist(const Pattern& p, int cap) {
  TwistVerdict v;
  v.cap = cap;
  if (!is_order_preserving(p)) {
    v.kind = TwistVerdict::Kind::no;
    v.witness = p;
    v.reason = "pattern is not order-preserving";
    return v;
  }
  const Rational rho = rotation_data(p).number;
  for (const Pattern& q : forced_patterns(p, cap)) {
    if (q != p && rotation_data(q).number == rho) {
      v.kind = TwistVerdict::Kind::no;
      v.witness = q;
      v.reason = "forces another pattern with rotation number " + rho.get_str();
      return v;
    }
  }
  return v;
}

}  // namespace triodyn
