#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triodyn/rational.hpp"

namespace triodyn {

inline constexpr int kBranches = 3;

// Arrow color; the underlying value is the displacement in thirds of a turn.
enum class ArrowColor : std::uint8_t { green = 0, black = 1, red = 2 };

inline int displacement(ArrowColor c) { return static_cast<int>(c); }
inline ArrowColor color_of_displacement(int thirds) {
  return static_cast<ArrowColor>(((thirds % 3) + 3) % 3);
}
inline int branch_advance(int from, int to) { return ((to - from) % 3 + 3) % 3; }
const char* to_string(ArrowColor c);

enum class RotationClass { slow, fast, ternary };
const char* to_string(RotationClass c);

struct RotationPair {
  std::int64_t d = 0;
  std::int64_t n = 1;
  friend bool operator==(const RotationPair&, const RotationPair&) = default;
};

struct ModifiedRotationPair {
  Rational t;
  std::int64_t m = 1;
  friend bool operator==(const ModifiedRotationPair& a, const ModifiedRotationPair& b) {
    return a.t == b.t && a.m == b.m;
  }
};

struct RotationData {
  RotationPair pair;
  Rational number;
  ModifiedRotationPair mrp;
  RotationClass cls = RotationClass::ternary;
};

// Builds the rotation data of a loop with total displacement d turns and
// length n: rotation number, modified rotation pair and class.
RotationData make_rotation_data(std::int64_t d, std::int64_t n);

// A cycle on the triod up to branch-fixing conjugacy.
//
// Points are identified by dense ids ordered branch-major and, within a
// branch, by rank (rank 1 is closest to the branching point). The successor
// is a single cyclic permutation of the ids. Instances are immutable and can
// only be produced through the validating factories, so every Pattern value
// satisfies the cycle invariants.
class Pattern {
 public:
  // counts[b] points on branch b; successor[id] is the image of id.
  // Throws Error{PeriodMismatch, NotSingleCycle}.
  static Pattern create(std::array<int, kBranches> counts, std::vector<int> successor);

  int period() const { return static_cast<int>(successor_.size()); }
  int count(int branch) const { return counts_[branch]; }
  const std::array<int, kBranches>& counts() const { return counts_; }

  int branch_of(int id) const { return branch_[id]; }
  // 1-based rank along the branch.
  int rank_of(int id) const { return id - offsets_[branch_[id]] + 1; }
  int id_of(int branch, int rank) const { return offsets_[branch] + rank - 1; }
  int successor(int id) const { return successor_[id]; }
  std::span<const int> successors() const { return successor_; }

  // Relabels branches: a point on branch b moves to branch perm[b] with the
  // same rank.
  Pattern relabel(const std::array<int, kBranches>& perm) const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.counts_ == b.counts_ && a.successor_ == b.successor_;
  }
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    if (a.period() != b.period()) return a.period() <=> b.period();
    if (auto c = a.counts_ <=> b.counts_; c != 0) return c;
    return a.successor_ <=> b.successor_;
  }

 private:
  Pattern(std::array<int, kBranches> counts, std::vector<int> successor);

  std::array<int, kBranches> counts_{};
  std::array<int, kBranches> offsets_{};
  std::vector<int> successor_;
  std::vector<std::uint8_t> branch_;
};

// Equality modulo the three cyclic branch relabelings.
bool equal_up_to_rotation(const Pattern& a, const Pattern& b);
// Least of the three cyclic relabelings under Pattern ordering.
Pattern rotation_representative(const Pattern& p);

// ---------------------------------------------------------------------------
// Raw, named description as read from files; validated into a Pattern.

struct PatternDescription {
  std::optional<int> period;
  std::array<std::vector<std::string>, kBranches> branches;
  std::map<std::string, std::string> successor;
};

// Throws Error{DuplicatePoint, PeriodMismatch, SyntaxError, NotSingleCycle}.
void validate(const PatternDescription& desc);
Pattern to_pattern(const PatternDescription& desc);

// Deterministic point name from (branch, rank): p1.., q1.., r1.. for
// branches 0, 1, 2.
std::string point_name(int branch, int rank);

std::string serialize(const Pattern& p);
Pattern parse(const std::string& text);
std::string to_json(const Pattern& p);
Pattern parse_json(const std::string& text);
// Accepts either external format; JSON is recognized by a leading '{'.
Pattern parse_any(const std::string& text);

// ---------------------------------------------------------------------------

enum class Orientation { kept, reflected };

struct Canonical {
  Pattern pattern;
  Orientation orientation;
  int rotation;  // shift applied to branch labels, 0..2
};

// Dihedral branch relabeling making the three points nearest the branching
// point black. Ties resolve to the least serialization.
// Throws Error{NoCanonicalOrdering}.
Canonical canonicalize(const Pattern& p);

// Color of each point: the displacement of the arrow x -> successor(x).
std::vector<ArrowColor> colors(const Pattern& p);

RotationData rotation_data(const Pattern& p);

bool is_order_preserving(const Pattern& p);

Pattern construct_primitive3();
// Unimodal slow twist with rotation number m/n placed on branch k.
// Throws Error{InvalidRotation}.
Pattern construct_unimodal_slow(int m, int n, int k);
// Unimodal fast twist with rotation number u/v placed on branch k.
// Throws Error{InvalidRotation}.
Pattern construct_unimodal_fast(int u, int v, int k);

}  // namespace triodyn
