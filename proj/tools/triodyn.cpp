// triodyn command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "triodyn/dot.hpp"
#include "triodyn/error.hpp"
#include "triodyn/graphs.hpp"
#include "triodyn/harness.hpp"
#include "triodyn/orderings.hpp"
#include "triodyn/pattern.hpp"
#include "triodyn/plinear.hpp"
#include "triodyn/structure.hpp"

using namespace triodyn;

namespace {

constexpr int kDefaultCap = 12;

Pattern load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_any(ss.str());
}

RotationClass parse_class(const std::string& s) {
  if (s == "slow") return RotationClass::slow;
  if (s == "fast") return RotationClass::fast;
  if (s == "ternary") return RotationClass::ternary;
  throw CLI::ValidationError("class", "expected slow, fast or ternary");
}

SharkovskyNumber parse_sharkovsky(const std::string& s) {
  if (s == "2^inf" || s == "inf") return SharkovskyNumber::infinity();
  const auto n = std::stoull(s);
  if (n == 0) throw CLI::ValidationError("sharkovsky", "periods start at 1");
  return SharkovskyNumber::of(n);
}

std::string describe(const RotationData& r) {
  std::ostringstream os;
  os << "rp (" << r.pair.d << "," << r.pair.n << ") rho " << r.number.get_str() << " mrp (" << r.mrp.t.get_str()
     << "," << r.mrp.m << ") " << to_string(r.cls);
  return os.str();
}

void check_cap(int cap, bool allow_large) {
  if (cap > kDefaultCap && !allow_large) {
    throw CLI::ValidationError("--max-period", "caps above 12 grow exponentially; pass --allow-large to insist");
  }
}

int report_result(const VerificationReport& r, const std::string& json_out, const std::string& csv_out) {
  std::cout << r.theorem << " [" << r.corpus << "]: " << r.passed << "/" << r.total << " passed\n";
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  for (const auto& v : r.violations) std::cout << "  violation " << v.check << ": " << v.message << "\n";
  if (!json_out.empty()) report_export(r, ReportFormat::json, json_out);
  if (!csv_out.empty()) report_export(r, ReportFormat::csv, csv_out);
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial dynamics of cycles on the triod"};
  app.require_subcommand(1);
  int exit_code = 0;

  // pattern
  auto* pattern = app.add_subcommand("pattern", "Validate or canonicalize a pattern file");
  pattern->require_subcommand(1);
  std::string pattern_file;
  auto* pcheck = pattern->add_subcommand("check", "Validate and print the normalized text form");
  pcheck->add_option("FILE", pattern_file)->required();
  pcheck->callback([&] {
    const Pattern p = load(pattern_file);
    std::cout << serialize(p);
    std::cerr << describe(rotation_data(p)) << (is_regular(p) ? " regular" : " not-regular") << "\n";
  });
  auto* pcanon = pattern->add_subcommand("canon", "Print the canonical branch relabeling");
  pcanon->add_option("FILE", pattern_file)->required();
  pcanon->callback([&] {
    const Canonical c = canonicalize(load(pattern_file));
    std::cout << serialize(c.pattern);
    std::cerr << "orientation " << (c.orientation == Orientation::kept ? "kept" : "reflected") << " rotation "
              << c.rotation << "\n";
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Build a unimodal twist pattern");
  construct->require_subcommand(1);
  int ca = 0, cb = 0, ck = 0;
  for (const char* kind : {"slow", "fast"}) {
    auto* sub = construct->add_subcommand(kind, std::string(kind) + " twist with rotation number A/B on branch K");
    sub->add_option("A", ca)->required();
    sub->add_option("B", cb)->required();
    sub->add_option("K", ck)->required();
    const bool slow = std::string(kind) == "slow";
    sub->callback([&, slow] {
      std::cout << serialize(slow ? construct_unimodal_slow(ca, cb, ck) : construct_unimodal_fast(ca, cb, ck));
    });
  }

  // forced
  auto* forced = app.add_subcommand("forced", "List cycles of the P-linear map");
  int max_period = kDefaultCap;
  bool allow_large = false;
  bool forced_json = false;
  forced->add_option("--max-period", max_period, "Period cap")->capture_default_str()->check(CLI::PositiveNumber);
  forced->add_flag("--allow-large", allow_large, "Permit caps above 12");
  forced->add_flag("--json", forced_json, "Emit CycleRecord JSON objects, one per line");
  forced->add_option("FILE", pattern_file)->required();
  forced->callback([&] {
    check_cap(max_period, allow_large);
    for (const CycleRecord& c : forced_cycles(load(pattern_file), max_period)) {
      if (forced_json) {
        std::cout << "{\"pattern\":" << to_json(c.pattern) << ",\"rotation_pair\":[" << c.rotation.pair.d << ","
                  << c.rotation.pair.n << "],\"rotation_number\":\"" << c.rotation.number.get_str()
                  << "\",\"class\":\"" << to_string(c.rotation.cls) << "\",\"regular\":"
                  << (c.regular ? "true" : "false") << ",\"exact\":" << (c.exact ? "true" : "false") << "}\n";
      } else {
        std::cout << "period " << c.pattern.period() << " " << describe(c.rotation) << (c.regular ? " regular" : "")
                  << (c.exact ? " exact" : "") << "\n";
      }
    }
  });

  // graph
  auto* graph = app.add_subcommand("graph", "Covering graph or point graph");
  std::string graph_kind = "markov";
  bool dot = false;
  graph->add_option("--kind", graph_kind)->check(CLI::IsMember({"markov", "points"}))->capture_default_str();
  graph->add_flag("--dot", dot, "Graphviz output");
  graph->add_option("FILE", pattern_file)->required();
  graph->callback([&] {
    const Pattern p = load(pattern_file);
    if (graph_kind == "markov") {
      const MarkovGraph g = covering_graph(embed(p));
      if (dot) {
        std::cout << to_dot(g);
        return;
      }
      for (int v = 0; v < g.size(); ++v) {
        std::cout << "I" << v << " ->";
        for (int w : g.out[v]) std::cout << " I" << w;
        std::cout << "\n";
      }
    } else {
      const ColoredGraph g = point_graph(p);
      if (dot) {
        std::cout << to_dot(g, p);
        return;
      }
      for (const Arrow& a : g.arrows) {
        std::cout << point_name(p.branch_of(a.source), p.rank_of(a.source)) << " -> "
                  << point_name(p.branch_of(a.target), p.rank_of(a.target)) << " " << to_string(a.color) << "\n";
      }
    }
  });

  // exact / blocks
  auto* exact = app.add_subcommand("exact", "Decide exactness of a regular pattern");
  exact->add_option("FILE", pattern_file)->required();
  exact->callback([&] { std::cout << (is_exact(load(pattern_file)) ? "exact" : "not exact") << "\n"; });

  auto* blocks = app.add_subcommand("blocks", "List block structures");
  blocks->add_option("FILE", pattern_file)->required();
  blocks->callback([&] {
    const Pattern p = load(pattern_file);
    const auto all = has_block_structure(p);
    if (all.empty()) std::cout << "none\n";
    for (const BlockStructure& bs : all) {
      std::cout << "quotient " << bs.quotient_period << " size " << bs.block_size << ":";
      for (const auto& b : bs.blocks) {
        std::cout << " {";
        for (std::size_t i = 0; i < b.size(); ++i) {
          std::cout << (i ? " " : "") << point_name(p.branch_of(b[i]), p.rank_of(b[i]));
        }
        std::cout << "}";
      }
      std::cout << "\n";
    }
  });

  // forces
  auto* forces_cmd = app.add_subcommand("forces", "Does pattern A force pattern B");
  std::string file_a, file_b;
  bool up_to_rotation = false;
  forces_cmd->add_option("A", file_a)->required();
  forces_cmd->add_option("B", file_b)->required();
  forces_cmd->add_flag("--up-to-rotation", up_to_rotation);
  forces_cmd->callback(
      [&] { std::cout << (forces(load(file_a), load(file_b), up_to_rotation) ? "yes" : "no") << "\n"; });

  // twist
  auto* twist = app.add_subcommand("twist", "Bounded triod-twist test");
  int twist_cap = kDefaultCap;
  twist->add_option("--cap", twist_cap)->capture_default_str()->check(CLI::PositiveNumber);
  twist->add_option("FILE", pattern_file)->required();
  twist->callback([&] {
    const TwistVerdict v = is_triod_twist(load(pattern_file), twist_cap);
    if (v.kind == TwistVerdict::Kind::no) {
      std::cout << "no: " << v.reason << "\n";
      if (v.witness) std::cout << serialize(*v.witness);
      exit_code = 1;
    } else {
      std::cout << "no counterexample up to " << v.cap << "\n";
    }
  });

  // order
  auto* order = app.add_subcommand("order", "Forcing orderings of the naturals");
  order->require_subcommand(1);
  std::string oa, ob;
  std::int64_t seg_m = 0, seg_cap = 0;
  for (const char* which : {"slow", "fast", "ternary", "sharkovsky"}) {
    const std::string name = which;
    auto* sub = order->add_subcommand(name, name + " ordering");
    sub->require_subcommand(1);
    auto* cmp = sub->add_subcommand("cmp", "Compare A and B");
    cmp->add_option("A", oa)->required();
    cmp->add_option("B", ob)->required();
    cmp->callback([&, name] {
      Order o;
      if (name == "sharkovsky") {
        o = sharkovsky_cmp(parse_sharkovsky(oa), parse_sharkovsky(ob));
      } else {
        const auto a = std::stoll(oa), b = std::stoll(ob);
        o = name == "slow" ? slow_cmp(a, b) : name == "fast" ? fast_cmp(a, b) : ternary_cmp(a, b);
      }
      std::cout << to_string(o) << "\n";
    });
    if (name == "slow" || name == "fast") {
      auto* seg = sub->add_subcommand("segment", "M and every n <= cap it precedes");
      seg->add_option("M", seg_m)->required();
      seg->add_option("--cap", seg_cap)->required();
      seg->callback([&, name] {
        const auto s = name == "slow" ? slow_segment(seg_m, seg_cap) : fast_segment(seg_m, seg_cap);
        for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << s[i];
        std::cout << "\n";
      });
    }
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Machine verification runs");
  verify->require_subcommand(1);
  int pattern_bound = 7, cap = kDefaultCap, jobs = default_jobs();
  std::string json_out, csv_out, verify_class;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads (default TRIODYN_JOBS or hardware)")->check(CLI::PositiveNumber);
    sub->add_option("--json", json_out, "Write a JSON report");
    sub->add_option("--csv", csv_out, "Write a CSV report");
  };
  auto* vorder = verify->add_subcommand("ordering", "Downward closure of exact forced periods");
  vorder->add_option("CLASS", verify_class)->required()->check(CLI::IsMember({"slow", "fast", "ternary"}));
  vorder->add_option("--pattern-bound", pattern_bound)->capture_default_str();
  vorder->add_option("--cap", cap)->capture_default_str();
  add_common(vorder);
  vorder->callback([&] {
    exit_code = report_result(verify_ordering(parse_class(verify_class), pattern_bound, cap, jobs), json_out, csv_out);
  });
  auto* voracle = verify->add_subcommand("oracle", "Exactness versus covering-matrix primitivity");
  voracle->add_option("--pattern-bound", pattern_bound)->capture_default_str();
  add_common(voracle);
  voracle->callback(
      [&] { exit_code = report_result(verify_exactness_oracle(pattern_bound, jobs), json_out, csv_out); });
  auto* vcolors = verify->add_subcommand("colors", "Ternary period and color balance");
  vcolors->add_option("--pattern-bound", pattern_bound)->capture_default_str();
  add_common(vcolors);
  vcolors->callback([&] { exit_code = report_result(verify_ternary_colors(pattern_bound, jobs), json_out, csv_out); });
  auto* vstruct = verify->add_subcommand("structure", "Structure theorems on the twist corpus");
  int hull_cap = 10;
  vstruct->add_option("--cap", hull_cap, "Cap for the mrp hull check")->capture_default_str();
  add_common(vstruct);
  vstruct->callback(
      [&] { exit_code = report_result(verify_structure_theorems(hull_cap, jobs), json_out, csv_out); });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List patterns of a period");
  int period = 0;
  EnumerationFilter filter;
  std::string enum_class;
  bool count_only = false;
  enumerate->add_option("--period", period)->required()->check(CLI::Range(1, 9));
  enumerate->add_flag("--regular", filter.regular);
  enumerate->add_flag("--exact", filter.exact);
  enumerate->add_option("--class", enum_class)->check(CLI::IsMember({"slow", "fast", "ternary"}));
  enumerate->add_flag("--up-to-rotation", filter.up_to_rotation);
  enumerate->add_flag("--count", count_only, "Print only the number of patterns");
  add_common(enumerate);
  enumerate->callback([&] {
    if (!enum_class.empty()) filter.cls = parse_class(enum_class);
    const auto all = enumerate_patterns(period, filter, jobs);
    if (count_only) {
      std::cout << all.size() << "\n";
      return;
    }
    for (std::size_t i = 0; i < all.size(); ++i) std::cout << (i ? "\n" : "") << serialize(all[i]);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
