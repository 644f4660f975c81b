#include "triodyn/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "triodyn/error.hpp"
#include "triodyn/graphs.hpp"
#include "triodyn/orderings.hpp"
#include "triodyn/plinear.hpp"

namespace triodyn {

int default_jobs() {
  if (const char* env = std::getenv("TRIODYN_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Pattern canonical_or_self(const Pattern& p) {
  try {
    return canonicalize(p).pattern;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoCanonicalOrdering) throw;
    return p;
  }
}

namespace {

std::vector<Pattern> all_patterns(int n) {
  std::vector<Pattern> out;
  std::vector<int> perm(n - 1);
  for (int k0 = 0; k0 <= n; ++k0) {
    for (int k1 = 0; k0 + k1 <= n; ++k1) {
      std::iota(perm.begin(), perm.end(), 1);
      do {
        // 0 -> perm[0] -> ... -> perm[n-2] -> 0
        std::vector<int> succ(n);
        int prev = 0;
        for (int x : perm) {
          succ[prev] = x;
          prev = x;
        }
        succ[prev] = 0;
        out.push_back(Pattern::create({k0, k1, n - k0 - k1}, std::move(succ)));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

bool keep(const Pattern& p, const EnumerationFilter& f) {
  if (f.up_to_rotation && rotation_representative(p) != p) return false;
  if (f.cls && rotation_data(canonical_or_self(p)).cls != *f.cls) return false;
  const bool need_regular = f.regular || f.exact || f.twist_cap;
  if (need_regular && !is_regular(p)) return false;
  if (f.exact && !is_exact_regular(p)) return false;
  if (f.twist_cap && is_triod_twist(p, *f.twist_cap).kind != TwistVerdict::Kind::no_counterexample_up_to) {
    return false;
  }
  return true;
}

template <typename Fn>
VerificationReport run_checks(VerificationReport report, const std::vector<Pattern>& corpus, int jobs, Fn check) {
  const auto results = parallel_map<std::optional<Violation>>(
      corpus.size(), jobs, [&](std::size_t i) { return check(corpus[i]); });
  for (const auto& r : results) {
    if (r) {
      report.fail(*r);
    } else {
      report.pass();
    }
  }
  return report;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

int loop_thirds(const MarkovGraph& g, std::span<const int> loop) {
  int thirds = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    thirds += branch_advance(g.vertices[loop[i]].branch, g.vertices[loop[(i + 1) % loop.size()]].branch);
  }
  return thirds;
}

RotationClass class_of(std::int64_t d, std::int64_t n) {
  if (3 * d < n) return RotationClass::slow;
  if (3 * d > n) return RotationClass::fast;
  return RotationClass::ternary;
}

// Periods in [4, cap] of exact forced cycles of the given class. Orbits
// are only computed for loops whose class matches and whose period is not
// yet known to be realized.
std::vector<char> exact_periods(const Pattern& p, RotationClass cls, int cap) {
  std::vector<char> found(cap + 1, 0);
  if (p.period() >= 4 && p.period() <= cap && rotation_data(p).cls == cls && is_exact_regular(p)) {
    found[p.period()] = 1;
  }
  const MarkovGraph g = covering_graph(embed(p));
  for_each_primitive_loop(g, cap, [&](std::span<const int> loop) {
    const int len = static_cast<int>(loop.size());
    const int d = loop_thirds(g, loop) / 3;
    if (class_of(d, len) != cls) return;
    const bool want_single = len >= 4 && !found[len];
    const bool want_doubled = 2 * len >= 4 && 2 * len <= cap && !found[2 * len];
    if (!want_single && !want_doubled) return;
    const LoopOrbits orbits = loop_orbits(g, loop, want_doubled);
    if (want_single && orbits.single && is_exact_regular(*orbits.single)) found[len] = 1;
    if (want_doubled && orbits.doubled && is_exact_regular(*orbits.doubled)) found[2 * len] = 1;
  });
  return found;
}

// m precedes n in the class ordering (both in [4, cap]).
bool class_precedes(RotationClass cls, std::int64_t m, std::int64_t n) {
  switch (cls) {
    case RotationClass::slow: return slow_cmp(m, n) == Order::precedes;
    case RotationClass::fast: return fast_cmp(m, n) == Order::precedes;
    case RotationClass::ternary: return m % 3 == 0 && n % 3 == 0 && n > m;
  }
  return false;
}

std::string describe_class(RotationClass cls) { return to_string(cls); }

}  // namespace

std::vector<Pattern> enumerate_patterns(int n, const EnumerationFilter& filter, int jobs) {
  if (n < 1) return {};
  std::vector<Pattern> raw = all_patterns(n);
  const auto kept =
      parallel_map<char>(raw.size(), jobs, [&](std::size_t i) { return static_cast<char>(keep(raw[i], filter)); });
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (kept[i]) out.push_back(std::move(raw[i]));
  }
  return out;
}

std::uint64_t closed_form_pattern_count(int n) {
  if (n < 1) return 0;
  std::uint64_t cycles = 1;
  for (int i = 2; i < n; ++i) cycles *= static_cast<std::uint64_t>(i);
  const auto compositions = static_cast<std::uint64_t>(n + 2) * static_cast<std::uint64_t>(n + 1) / 2;
  return cycles * compositions;
}

std::vector<Pattern> regular_patterns_up_to(int bound, int jobs) {
  std::vector<Pattern> out;
  EnumerationFilter f;
  f.regular = true;
  for (int n = 3; n <= bound; ++n) {
    std::vector<Pattern> part = enumerate_patterns(n, f, jobs);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

VerificationReport verify_ordering(RotationClass cls, int pattern_bound, int cycle_cap, int jobs) {
  VerificationReport report;
  report.theorem = describe_class(cls) + "-ordering";
  report.corpus = "regular patterns of period 3.." + std::to_string(pattern_bound) + ", forced cycles up to period " +
                  std::to_string(cycle_cap);
  report.pattern_bound = pattern_bound;
  report.cycle_cap = cycle_cap;
  const std::vector<Pattern> corpus = regular_patterns_up_to(pattern_bound, jobs);
  const auto sets = parallel_map<std::vector<char>>(
      corpus.size(), jobs, [&](std::size_t i) { return exact_periods(canonical_or_self(corpus[i]), cls, cycle_cap); });
  std::uint64_t nonempty = 0;
  std::vector<std::uint64_t> realized(cycle_cap + 1, 0);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::vector<char>& s = sets[i];
    std::vector<std::int64_t> periods;
    for (int m = 4; m <= cycle_cap; ++m) {
      if (s[m]) {
        periods.push_back(m);
        ++realized[m];
      }
    }
    if (!periods.empty()) ++nonempty;
    std::vector<std::string> missing;
    for (std::int64_t m : periods) {
      for (int n = 4; n <= cycle_cap; ++n) {
        if (!s[n] && class_precedes(cls, m, n)) missing.push_back(std::to_string(m) + ">>" + std::to_string(n));
      }
    }
    if (missing.empty()) {
      report.pass();
      continue;
    }
    std::string msg = "exact " + describe_class(cls) + " periods " + join(periods) + " miss";
    for (const std::string& x : missing) msg += " " + x;
    report.fail({"downward-closed", msg, {corpus[i]}});
  }
  report.notes.push_back("patterns checked: " + std::to_string(corpus.size()));
  report.notes.push_back("patterns with an exact " + describe_class(cls) + " forced cycle: " + std::to_string(nonempty));
  std::string hist = "patterns realizing each period:";
  for (int m = 4; m <= cycle_cap; ++m) hist += " " + std::to_string(m) + ":" + std::to_string(realized[m]);
  report.notes.push_back(hist);
  return report;
}

VerificationReport verify_exactness_oracle(int pattern_bound, int jobs) {
  VerificationReport report;
  report.theorem = "exactness-oracle";
  report.corpus = "regular patterns of period 3.." + std::to_string(pattern_bound);
  report.pattern_bound = pattern_bound;
  const std::vector<Pattern> corpus = regular_patterns_up_to(pattern_bound, jobs);
  report = run_checks(std::move(report), corpus, jobs, [](const Pattern& p) -> std::optional<Violation> {
    const bool exact = is_exact_regular(p);
    const bool primitive = is_primitive(covering_graph(embed(p)));
    if (exact == primitive) return std::nullopt;
    return Violation{"exact-iff-primitive",
                     std::string("is_exact=") + (exact ? "true" : "false") +
                         " primitive=" + (primitive ? "true" : "false"),
                     {p}};
  });
  report.notes.push_back("patterns checked: " + std::to_string(corpus.size()));
  return report;
}

VerificationReport verify_ternary_colors(int pattern_bound, int jobs) {
  VerificationReport report;
  report.theorem = "ternary-colors";
  report.corpus = "exact ternary regular patterns of period 3.." + std::to_string(pattern_bound);
  report.pattern_bound = pattern_bound;
  std::vector<Pattern> corpus;
  EnumerationFilter f;
  f.exact = true;
  f.cls = RotationClass::ternary;
  for (int n = 3; n <= pattern_bound; ++n) {
    std::vector<Pattern> part = enumerate_patterns(n, f, jobs);
    corpus.insert(corpus.end(), part.begin(), part.end());
  }
  report = run_checks(std::move(report), corpus, jobs, [](const Pattern& p) -> std::optional<Violation> {
    int red = 0;
    int green = 0;
    for (ArrowColor c : colors(canonical_or_self(p))) {
      red += c == ArrowColor::red;
      green += c == ArrowColor::green;
    }
    if (p.period() % 3 == 0 && red == green && red >= 1) return std::nullopt;
    return Violation{"ternary-colors",
                     "period " + std::to_string(p.period()) + " red " + std::to_string(red) + " green " +
                         std::to_string(green),
                     {p}};
  });
  report.notes.push_back("exact ternary patterns: " + std::to_string(corpus.size()));
  return report;
}

std::vector<Pattern> twist_corpus() {
  std::vector<Pattern> out;
  for (int n = 4; n <= 10; ++n) {
    for (int m = 1; 3 * m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      for (int k = 0; k < kBranches; ++k) out.push_back(construct_unimodal_slow(m, n, k));
    }
  }
  for (int v = 4; v <= 10; ++v) {
    for (int u = 1; 2 * u < v; ++u) {
      if (3 * u <= v || std::gcd(u, v) != 1) continue;
      for (int k = 0; k < kBranches; ++k) out.push_back(construct_unimodal_fast(u, v, k));
    }
  }
  return out;
}

std::vector<Rational> mrp_hull_gaps(const Pattern& pattern, int cap) {
  const Pattern p = canonical_or_self(pattern);
  const MarkovGraph g = covering_graph(embed(p));
  std::set<Rational> realized;
  if (p.period() <= cap) realized.insert(rotation_data(p).number);
  for_each_primitive_loop(g, cap, [&](std::span<const int> loop) {
    const int len = static_cast<int>(loop.size());
    const Rational rho = make_rational(loop_thirds(g, loop) / 3, len);
    if (realized.count(rho)) return;
    const LoopOrbits orbits = loop_orbits(g, loop, 2 * len <= cap);
    if (orbits.single || orbits.doubled) realized.insert(rho);
  });
  std::vector<Rational> gaps;
  if (realized.empty()) return gaps;
  const Rational lo = *realized.begin();
  const Rational hi = *realized.rbegin();
  for (int q = 1; q <= cap; ++q) {
    for (int num = 0; num <= q; ++num) {
      if (std::gcd(num, q) != 1) continue;
      const Rational t = make_rational(num, q);
      if (lo < t && t < hi && !realized.count(t)) gaps.push_back(t);
    }
  }
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

namespace {

// Some loop of exactly `len` intervals with `d` turns carries an exact
// cycle of pattern class `cls`.
bool forces_exact_cycle(const Pattern& p, int len, std::optional<int> d, RotationClass cls) {
  const MarkovGraph g = covering_graph(embed(p));
  bool found = false;
  for_each_primitive_loop(g, len, [&](std::span<const int> loop) {
    const int l = static_cast<int>(loop.size());
    if (found || (l != len && 2 * l != len)) return;
    const int turns = loop_thirds(g, loop) / 3;
    const int total = l == len ? turns : 2 * turns;
    if (class_of(total, len) != cls || (d && total != *d)) return;
    const LoopOrbits orbits = loop_orbits(g, loop, 2 * l == len);
    const std::optional<Pattern>& q = l == len ? orbits.single : orbits.doubled;
    found = q && is_exact_regular(*q);
  });
  return found;
}

bool nearest_point_is_image_of(const Pattern& p, ArrowColor color) {
  const std::vector<ArrowColor> c = colors(p);
  for (int x = 0; x < p.period(); ++x) {
    if (c[x] == color && p.rank_of(p.successor(x)) == 1) return true;
  }
  return false;
}

std::string twist_name(const Pattern& p) {
  const RotationData r = rotation_data(p);
  return std::string(r.cls == RotationClass::slow ? "slow" : "fast") + " twist rp (" + std::to_string(r.pair.d) +
         "," + std::to_string(r.pair.n) + ")";
}

}  // namespace

VerificationReport verify_structure_theorems(int hull_cap, int jobs) {
  VerificationReport report;
  report.theorem = "structure";
  report.corpus = "unimodal slow m/n and fast u/v twists with n, v <= 10 on each branch";
  report.cycle_cap = hull_cap;
  report.notes.push_back("conclusion-only: neighbourhood clauses are checked at the P-linear map itself");
  const std::vector<Pattern> corpus = twist_corpus();

  struct Outcome {
    std::vector<std::optional<Violation>> checks;
    std::vector<Pattern> slow12;  // exact slow period-12 forced cycles
  };
  const auto outcomes = parallel_map<Outcome>(corpus.size(), jobs, [&](std::size_t i) {
    const Pattern& p = corpus[i];
    const RotationData r = rotation_data(p);
    const bool slow = r.cls == RotationClass::slow;
    Outcome o;
    // (a) a nearest point is the image of a green (slow) or red (fast) point
    const ArrowColor want = slow ? ArrowColor::green : ArrowColor::red;
    if (nearest_point_is_image_of(p, want)) {
      o.checks.emplace_back();
    } else {
      o.checks.push_back(Violation{"a:nearest-image", twist_name(p) + ": no nearest point is the image of a " +
                                                          to_string(want) + " point", {p}});
    }
    // (b) rotation pair (k, n) forces an exact same-class (k+1, n+3)
    const int len = static_cast<int>(r.pair.n) + 3;
    if (forces_exact_cycle(p, len, static_cast<int>(r.pair.d) + 1, r.cls)) {
      o.checks.emplace_back();
    } else {
      o.checks.push_back(Violation{"b:k+1,n+3", twist_name(p) + ": no exact cycle with rp (" +
                                                    std::to_string(r.pair.d + 1) + "," + std::to_string(len) + ")",
                                   {p}});
    }
    // (d) hull consistency of realized rotation numbers
    const std::vector<Rational> gaps = mrp_hull_gaps(p, hull_cap);
    if (gaps.empty()) {
      o.checks.emplace_back();
    } else {
      std::string msg = twist_name(p) + ": unrealized";
      for (const Rational& t : gaps) msg += " " + t.get_str();
      o.checks.push_back(Violation{"d:mrp-hull", msg, {p}});
    }
    // (e) no red points in slow twists, no green points in fast twists
    const ArrowColor banned = slow ? ArrowColor::red : ArrowColor::green;
    const auto c = colors(p);
    if (std::find(c.begin(), c.end(), banned) == c.end()) {
      o.checks.emplace_back();
    } else {
      o.checks.push_back(Violation{"e:colors", twist_name(p) + ": has a " + to_string(banned) + " point", {p}});
    }
    if (slow) {
      for (const Pattern& q : forced_patterns(p, 12)) {
        if (q.period() == 12 && rotation_data(q).cls == RotationClass::slow && is_exact_regular(q)) {
          o.slow12.push_back(q);
        }
      }
    }
    return o;
  });

  std::set<Pattern> slow12;
  for (const Outcome& o : outcomes) {
    for (const auto& c : o.checks) {
      if (c) {
        report.fail(*c);
      } else {
        report.pass();
      }
    }
    for (const Pattern& q : o.slow12) slow12.insert(canonical_or_self(q));
  }

  // (c) at k = 1: exact slow period 12 forces exact slow period 8, exact
  // fast period 6 forces exact fast period 4.
  EnumerationFilter fast6;
  fast6.exact = true;
  fast6.cls = RotationClass::fast;
  std::vector<Pattern> antecedents(slow12.begin(), slow12.end());
  const std::size_t n_slow = antecedents.size();
  const std::vector<Pattern> fast = enumerate_patterns(6, fast6, jobs);
  antecedents.insert(antecedents.end(), fast.begin(), fast.end());
  report = run_checks(std::move(report), antecedents, jobs, [](const Pattern& antecedent) -> std::optional<Violation> {
    const Pattern q = canonical_or_self(antecedent);
    const bool slow = rotation_data(q).cls == RotationClass::slow;
    const int target = slow ? 8 : 4;
    if (forces_exact_cycle(q, target, std::nullopt, rotation_data(q).cls)) return std::nullopt;
    return Violation{slow ? "c:9k+3=>6k+2" : "c:9k-3=>6k-2",
                     std::string("exact ") + (slow ? "slow period 12" : "fast period 6") +
                         " cycle forces no exact cycle of period " + std::to_string(target),
                     {q}};
  });
  report.notes.push_back("twist corpus size: " + std::to_string(corpus.size()));
  report.notes.push_back("(c) antecedents: " + std::to_string(n_slow) +
                         " exact slow period-12 cycles forced by corpus members, " + std::to_string(fast.size()) +
                         " exact fast period-6 patterns (exhaustive)");
  return report;
}

}  // namespace triodyn
