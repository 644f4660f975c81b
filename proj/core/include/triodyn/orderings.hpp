#pragma once

#include <cstdint>
#include <vector>

#include "triodyn/rational.hpp"

namespace triodyn {

enum class Order { precedes, equal, follows };
const char* to_string(Order o);

// An element of N together with the symbol 2^inf.
struct SharkovskyNumber {
  std::uint64_t value = 1;  // ignored when two_to_infinity is set
  bool two_to_infinity = false;

  static SharkovskyNumber of(std::uint64_t n) { return {n, false}; }
  static SharkovskyNumber infinity() { return {0, true}; }
  friend bool operator==(const SharkovskyNumber&, const SharkovskyNumber&) = default;
};

// 3 > 5 > 7 > ... > 2*3 > 2*5 > ... > 4*3 > ... > 2^inf > ... > 8 > 4 > 2 > 1.
// Throws std::invalid_argument for 0.
Order sharkovsky_cmp(SharkovskyNumber a, SharkovskyNumber b);
// m in Sh(k): k itself and everything after it; Sh(2^inf) is the powers of two.
bool in_sharkovsky_tail(SharkovskyNumber k, SharkovskyNumber m);

// Forcing orderings of N_{>3}. Ranks are dense, starting at 0 for the first
// element; a smaller rank precedes. Throw Error{OutOfDomain} for n <= 3.
std::int64_t slow_rank(std::int64_t n);
Order slow_cmp(std::int64_t a, std::int64_t b);
// m together with every n in [4, cap] that m precedes, listed by rank.
std::vector<std::int64_t> slow_segment(std::int64_t m, std::int64_t cap);
// First `count` elements of the slow ordering.
std::vector<std::int64_t> slow_sequence(std::size_t count);

std::int64_t fast_rank(std::int64_t n);
Order fast_cmp(std::int64_t a, std::int64_t b);
std::vector<std::int64_t> fast_segment(std::int64_t m, std::int64_t cap);
std::vector<std::int64_t> fast_sequence(std::size_t count);

// Multiples of 3 in [m, cap]. Throws Error{OutOfDomain} unless m > 3 and
// 3 divides m.
std::vector<std::int64_t> ternary_segment(std::int64_t m, std::int64_t cap);
// Natural order on multiples of three: a smaller period precedes.
Order ternary_cmp(std::int64_t a, std::int64_t b);

// Point of the real line with prongs: t with a label in N, 2^inf, or 0 for
// the line itself.
struct MrpPoint {
  enum class Label { natural, two_to_infinity, zero };
  Rational t;
  Label label = Label::natural;
  std::uint64_t m = 1;

  static MrpPoint natural(Rational t, std::uint64_t m) { return {std::move(t), Label::natural, m}; }
  static MrpPoint infinity(Rational t) { return {std::move(t), Label::two_to_infinity, 0}; }
  static MrpPoint zero(Rational t) { return {std::move(t), Label::zero, 0}; }
};

// x lies in the convex hull [e1, e2]: t strictly between, or t == t_i and
// m in Sh(m_i). The line point (t_i, 0) is always in the hull; an endpoint
// labelled 0 contributes only its line point.
bool mrp_hull_contains(const MrpPoint& e1, const MrpPoint& e2, const MrpPoint& x);

}  // namespace triodyn
