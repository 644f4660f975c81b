#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triodyn/pattern.hpp"
#include "triodyn/structure.hpp"

namespace triodyn {

// Worker count: TRIODYN_JOBS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int default_jobs();

// Runs fn(0..count-1) on `jobs` threads. Results land at their own index,
// so the output never depends on scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn);

// The canonical relabeling of p when one exists, otherwise p. Rotation
// numbers and colors of regular patterns are read in this labeling.
Pattern canonical_or_self(const Pattern& p);

struct EnumerationFilter {
  bool regular = false;
  bool exact = false;  // implies regular
  std::optional<RotationClass> cls;  // measured in the canonical labeling
  std::optional<int> twist_cap;  // keep patterns with no twist counterexample up to the cap
  bool up_to_rotation = false;   // keep one representative per cyclic branch relabeling
};

// Every pattern of period n: all weak compositions (k0, k1, k2) of n, each
// with all (n-1)! cyclic successors, in a fixed order; filters applied.
std::vector<Pattern> enumerate_patterns(int n, const EnumerationFilter& filter = {}, int jobs = 1);
// Independent count: (n-1)! * C(n+2, 2).
std::uint64_t closed_form_pattern_count(int n);
// Regular patterns of every period in [3, bound], by period then pattern order.
std::vector<Pattern> regular_patterns_up_to(int bound, int jobs = 1);

struct Violation {
  std::string check;
  std::string message;
  std::vector<Pattern> witnesses;
};

struct VerificationReport {
  std::string theorem;
  std::string corpus;
  int pattern_bound = 0;
  int cycle_cap = 0;
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> notes;
  std::vector<Violation> violations;

  std::uint64_t failed() const { return total - passed; }
  bool ok() const { return violations.empty() && passed == total; }

  void pass() {
    ++total;
    ++passed;
  }
  void fail(Violation v) {
    ++total;
    violations.push_back(std::move(v));
  }
};

// For every regular pattern p of period <= pattern_bound: the periods of
// exact forced cycles of the class with period <= cycle_cap form a set
// closed under the class ordering within [4, cycle_cap].
VerificationReport verify_ordering(RotationClass cls, int pattern_bound, int cycle_cap, int jobs = 1);

// is_exact agrees with primitivity of the covering matrix for every regular
// pattern up to the bound.
VerificationReport verify_exactness_oracle(int pattern_bound, int jobs = 1);

// Exact ternary patterns up to the bound have period divisible by 3 and as
// many red as green points, at least one of each.
VerificationReport verify_ternary_colors(int pattern_bound, int jobs = 1);

// Unimodal twists used as the structure-theorem corpus: slow m/n with n <= 10
// and fast u/v with v <= 10, each on branches 0, 1, 2.
std::vector<Pattern> twist_corpus();

// Checks (a)-(e) on the twist corpus; (c) runs on every period-12 exact slow
// cycle forced by a corpus member and every period-6 exact fast pattern.
// `hull_cap` bounds the forced cycles used for the mrp hull check.
VerificationReport verify_structure_theorems(int hull_cap, int jobs = 1);

// Rotation numbers p/q, q <= cap, strictly between the extremes of the
// realized numbers of forced cycles up to the cap, that are not realized.
// Rotation numbers are measured in the canonical labeling of p.
std::vector<Rational> mrp_hull_gaps(const Pattern& p, int cap);

enum class ReportFormat { json, csv };

// Writes the report to `path`. Each violation witness goes to its own file
// beside it, named <stem>.w<violation>.<witness>.txt and referenced by
// basename. Returns every file written. Throws Error{IoError}.
std::vector<std::filesystem::path> report_export(const VerificationReport& r, ReportFormat format,
                                                 const std::filesystem::path& path);
// In-memory renderings; witness names are those report_export would use
// for the given stem.
std::string report_to_json(const VerificationReport& r, const std::string& stem);
std::string report_to_csv(const VerificationReport& r, const std::string& stem);

}  // namespace triodyn

#include "triodyn/detail/parallel.hpp"
