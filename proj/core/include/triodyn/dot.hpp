#pragma once

#include <string>

#include "triodyn/plinear.hpp"

namespace triodyn {

// Graphviz renderings. Point-graph arrows carry color=green|black|red.
std::string to_dot(const MarkovGraph& g);
std::string to_dot(const ColoredGraph& g, const Pattern& p);

}  // namespace triodyn
