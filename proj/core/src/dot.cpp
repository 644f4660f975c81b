#include "triodyn/dot.hpp"

#include <sstream>

namespace triodyn {

namespace {

std::string interval_label(const BasicInterval& iv) {
  const std::string inner = iv.rank == 1 ? "a" : point_name(iv.branch, iv.rank - 1);
  return "(" + inner + "," + point_name(iv.branch, iv.rank) + ")";
}

}  // namespace

std::string to_dot(const MarkovGraph& g) {
  std::ostringstream out;
  out << "digraph markov {\n";
  for (int v = 0; v < g.size(); ++v) {
    out << "  v" << v << " [label=\"" << interval_label(g.vertices[v]) << "\"];\n";
  }
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.out[v]) out << "  v" << v << " -> v" << w << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const ColoredGraph& g, const Pattern& p) {
  std::ostringstream out;
  out << "digraph points {\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    out << "  " << point_name(p.branch_of(v), p.rank_of(v)) << ";\n";
  }
  for (const Arrow& a : g.arrows) {
    out << "  " << point_name(p.branch_of(a.source), p.rank_of(a.source)) << " -> "
        << point_name(p.branch_of(a.target), p.rank_of(a.target)) << " [color=" << to_string(a.color) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace triodyn
