#include "triodyn/orderings.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <tuple>

#include "triodyn/error.hpp"

namespace triodyn {

const char* to_string(Order o) {
  switch (o) {
    case Order::precedes: return "precedes";
    case Order::equal: return "equal";
    case Order::follows: return "follows";
  }
  return "?";
}

namespace {

template <typename T>
Order order_of_keys(const T& a, const T& b) {
  if (a < b) return Order::precedes;
  if (b < a) return Order::follows;
  return Order::equal;
}

// Smaller key precedes.
std::tuple<int, std::int64_t, std::uint64_t> sharkovsky_key(SharkovskyNumber x) {
  if (x.two_to_infinity) return {1, 0, 0};
  if (x.value == 0) throw std::invalid_argument("0 is not in the Sharkovsky ordering");
  std::uint64_t odd = x.value;
  std::int64_t e = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++e;
  }
  if (odd > 1) return {0, e, odd};
  return {2, -e, 0};
}

void require_domain(std::int64_t n) {
  if (n <= 3) throw Error(ErrorCode::OutOfDomain, std::to_string(n) + " is not in N_{>3}");
}

// Position of n inside the repeating block of six families:
// key = 6 (k - 1) + 1 + family.
std::int64_t slow_key(std::int64_t n) {
  require_domain(n);
  if (n % 3 == 1) return 6 * ((n - 1) / 3 - 1) + 1 + 4;        // 3k+1
  if (n % 6 == 5) return 6 * ((n + 1) / 6 - 1) + 1 + 0;        // 6k-1
  if (n % 6 == 2) return 6 * ((n - 2) / 6 - 1) + 1 + 3;        // 6k+2
  if (n % 9 == 0) return 6 * (n / 9 - 1) + 1 + 1;              // 9k
  if (n % 9 == 3) return 6 * ((n - 3) / 9 - 1) + 1 + 2;        // 9k+3
  return 6 * ((n - 6) / 9 - 1) + 1 + 5;                        // 9k+6, k >= 0
}

std::int64_t fast_key(std::int64_t n) {
  require_domain(n);
  if (n % 6 == 1) return 6 * ((n + 5) / 6 - 1) + 1 + 0;        // 6k-5
  if (n % 6 == 4) return 6 * ((n + 2) / 6 - 1) + 1 + 3;        // 6k-2
  if (n % 3 == 2) return 6 * ((n + 1) / 3 - 1) + 1 + 4;        // 3k-1
  if (n % 9 == 3) return 6 * ((n + 6) / 9 - 1) + 1 + 1;        // 9k-6
  if (n % 9 == 6) return 6 * ((n + 3) / 9 - 1) + 1 + 2;        // 9k-3
  return 6 * (n / 9 - 1) + 1 + 5;                              // 9k
}

// Inverse of the keys: value of the family member at a key, or 0 when the
// key holds a discarded value.
std::int64_t slow_value(std::int64_t key) {
  if (key == 0) return 6;
  const std::int64_t k = (key - 1) / 6 + 1;
  switch ((key - 1) % 6) {
    case 0: return 6 * k - 1;
    case 1: return 9 * k;
    case 2: return 9 * k + 3;
    case 3: return 6 * k + 2;
    case 4: return 3 * k + 1;
    default: return 9 * k + 6;
  }
}

std::int64_t fast_value(std::int64_t key) {
  const std::int64_t k = (key - 1) / 6 + 1;
  std::int64_t v = 0;
  switch ((key - 1) % 6) {
    case 0: v = 6 * k - 5; break;
    case 1: v = 9 * k - 6; break;
    case 2: v = 9 * k - 3; break;
    case 3: v = 6 * k - 2; break;
    case 4: v = 3 * k - 1; break;
    default: v = 9 * k; break;
  }
  return v > 3 ? v : 0;
}

template <typename Rank>
std::vector<std::int64_t> tail_segment(std::int64_t m, std::int64_t cap, Rank rank) {
  const std::int64_t rm = rank(m);
  std::vector<std::int64_t> out;
  for (std::int64_t n = 4; n <= cap; ++n) {
    if (rank(n) >= rm) out.push_back(n);
  }
  std::sort(out.begin(), out.end(), [&](std::int64_t a, std::int64_t b) { return rank(a) < rank(b); });
  return out;
}

}  // namespace

Order sharkovsky_cmp(SharkovskyNumber a, SharkovskyNumber b) {
  return order_of_keys(sharkovsky_key(a), sharkovsky_key(b));
}

bool in_sharkovsky_tail(SharkovskyNumber k, SharkovskyNumber m) {
  if (m.two_to_infinity) return false;
  if (k.two_to_infinity) return (m.value & (m.value - 1)) == 0;
  return sharkovsky_cmp(k, m) != Order::follows;
}

std::int64_t slow_rank(std::int64_t n) { return slow_key(n); }

Order slow_cmp(std::int64_t a, std::int64_t b) { return order_of_keys(slow_rank(a), slow_rank(b)); }

std::vector<std::int64_t> slow_segment(std::int64_t m, std::int64_t cap) {
  return tail_segment(m, cap, slow_rank);
}

std::vector<std::int64_t> slow_sequence(std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t key = 0; out.size() < count; ++key) out.push_back(slow_value(key));
  return out;
}

std::int64_t fast_rank(std::int64_t n) {
  // Keys 1, 2 and 5 hold the discarded values 1, 3 and 2.
  const std::int64_t key = fast_key(n);
  if (key == 3) return 0;
  if (key == 4) return 1;
  return key - 4;
}

Order fast_cmp(std::int64_t a, std::int64_t b) { return order_of_keys(fast_rank(a), fast_rank(b)); }

std::vector<std::int64_t> fast_segment(std::int64_t m, std::int64_t cap) {
  return tail_segment(m, cap, fast_rank);
}

std::vector<std::int64_t> fast_sequence(std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t key = 1; out.size() < count; ++key) {
    if (const std::int64_t v = fast_value(key)) out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> ternary_segment(std::int64_t m, std::int64_t cap) {
  if (m <= 3 || m % 3 != 0) {
    throw Error(ErrorCode::OutOfDomain, std::to_string(m) + " is not a multiple of 3 above 3");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t n = m; n <= cap; n += 3) out.push_back(n);
  return out;
}

Order ternary_cmp(std::int64_t a, std::int64_t b) {
  for (std::int64_t n : {a, b}) {
    if (n <= 3 || n % 3 != 0) throw Error(ErrorCode::OutOfDomain, std::to_string(n) + " is not a multiple of 3 above 3");
  }
  return order_of_keys(a, b);
}

namespace {

bool on_prong(const MrpPoint& end, const MrpPoint& x) {
  if (x.label == MrpPoint::Label::zero) return true;
  switch (end.label) {
    case MrpPoint::Label::zero: return false;
    case MrpPoint::Label::two_to_infinity:
      return in_sharkovsky_tail(SharkovskyNumber::infinity(),
                                x.label == MrpPoint::Label::natural ? SharkovskyNumber::of(x.m)
                                                                    : SharkovskyNumber::infinity());
    case MrpPoint::Label::natural:
      return x.label == MrpPoint::Label::natural &&
             in_sharkovsky_tail(SharkovskyNumber::of(end.m), SharkovskyNumber::of(x.m));
  }
  return false;
}

}  // namespace

bool mrp_hull_contains(const MrpPoint& e1, const MrpPoint& e2, const MrpPoint& x) {
  const Rational& lo = e1.t < e2.t ? e1.t : e2.t;
  const Rational& hi = e1.t < e2.t ? e2.t : e1.t;
  if (lo < x.t && x.t < hi) return true;
  return (x.t == e1.t && on_prong(e1, x)) || (x.t == e2.t && on_prong(e2, x));
}

}  // namespace triodyn
