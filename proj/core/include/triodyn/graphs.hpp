#pragma once

#include <functional>
#include <span>
#include <vector>

#include "triodyn/pattern.hpp"
#include "triodyn/plinear.hpp"
#include "triodyn/rational.hpp"

namespace triodyn {

// Plain adjacency lists; out[v] holds the successors of v.
using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency_of(const ColoredGraph& g);
Adjacency adjacency_of(const MarkovGraph& g);

struct Loop {
  std::vector<int> vertices;        // cyclic; starts at its least vertex
  int length = 0;
  std::int64_t total_displacement = 0;  // in whole turns
};

struct RotationInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const RotationInterval& a, const RotationInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Throws Error{NotALoop} if consecutive vertices (cyclically) are not joined
// by arrows or the displacement is not a whole number of turns.
RotationPair loop_rotation_pair(const ColoredGraph& g, std::span<const int> loop);

bool strongly_connected(const Adjacency& adj);

// Minimum and maximum cycle mean of the displacement weights (Karp).
// Throws Error{NotStronglyConnected}.
RotationInterval rotation_set(const ColoredGraph& g);

// Johnson's algorithm: each elementary circuit exactly once, starting at its
// least vertex. Self-loops count as circuits of length 1.
void elementary_circuits(const Adjacency& adj, const std::function<void(std::span<const int>)>& visit);
void elementary_loops(const ColoredGraph& g, const std::function<void(const Loop&)>& visit);
std::vector<Loop> elementary_loops(const ColoredGraph& g);

// True iff some power of the 0/1 adjacency matrix up to the Wielandt bound
// (V-1)^2 + 1 is entrywise positive.
bool is_primitive(const Adjacency& adj);
bool is_primitive(const MarkovGraph& m);

}  // namespace triodyn
