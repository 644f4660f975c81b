#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triodyn/pattern.hpp"

namespace triodyn {

// Partition of a cycle into blocks permuted by the cycle along a quotient
// cycle of period m.
struct BlockStructure {
  int quotient_period = 0;  // m
  int block_size = 0;       // q, with m * q == period
  std::vector<std::vector<int>> blocks;  // point ids, each sorted; blocks sorted by first id
};

struct CycleRecord {
  Pattern pattern;
  RotationData rotation;
  bool exact = false;
  bool regular = false;
};

// All block structures, by increasing quotient period. Candidates are the
// orbits of successor^m for each proper divisor m of the period.
std::vector<BlockStructure> has_block_structure(const Pattern& p);

// p is exhibited by some map whose only fixed point is the branching point,
// i.e. p forces no period-1 pattern.
bool is_admissible(const Pattern& p);
// Admissible and forcing no primitive period-2 pattern.
bool is_regular(const Pattern& p);

// Exactness of f_P for regular p. Throws Error{NotRegular}.
bool is_exact(const Pattern& p);
// Same decision without the regularity guard; callers must know p is regular.
bool is_exact_regular(const Pattern& p);

CycleRecord make_cycle_record(const Pattern& p);

// Forced cycles of period <= max_period with their rotation data and flags,
// sorted by pattern.
std::vector<CycleRecord> forced_cycles(const Pattern& p, int max_period);

// a forces b. With up_to_rotation, a cyclic branch relabeling of b counts.
bool forces(const Pattern& a, const Pattern& b, bool up_to_rotation = false);

struct TwistVerdict {
  enum class Kind { no, no_counterexample_up_to };
  Kind kind = Kind::no_counterexample_up_to;
  int cap = 0;
  // For Kind::no: the forced pattern with the same rotation number, or p
  // itself when p fails order preservation.
  std::optional<Pattern> witness;
  std::string reason;
};

TwistVerdict is_triod_twist(const Pattern& p, int cap);

}  // namespace triodyn
