#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "triodyn/error.hpp"
#include "triodyn/pattern.hpp"

namespace triodyn {

namespace {

constexpr char kBranchLetters[kBranches] = {'p', 'q', 'r'};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct IndexedDescription {
  std::unordered_map<std::string, int> id;  // name -> dense id
  std::array<int, kBranches> counts{};
  std::vector<int> successor;
};

// Shared by validate() and to_pattern(): checks everything but the cycle
// structure, which Pattern::create decides.
IndexedDescription index_description(const PatternDescription& desc) {
  IndexedDescription out;
  int next = 0;
  for (int b = 0; b < kBranches; ++b) {
    out.counts[b] = static_cast<int>(desc.branches[b].size());
    for (const std::string& name : desc.branches[b]) {
      if (!out.id.emplace(name, next).second) {
        throw Error(ErrorCode::DuplicatePoint, "point '" + name + "' is listed more than once");
      }
      ++next;
    }
  }
  if (desc.period && *desc.period != next) {
    throw Error(ErrorCode::PeriodMismatch, "period " + std::to_string(*desc.period) +
                                               " but " + std::to_string(next) + " points listed");
  }
  if (next == 0) throw Error(ErrorCode::PeriodMismatch, "pattern has no points");
  out.successor.assign(next, -1);
  for (const auto& [from, to] : desc.successor) {
    auto f = out.id.find(from);
    auto t = out.id.find(to);
    if (f == out.id.end()) throw Error(ErrorCode::SyntaxError, "unknown point '" + from + "' in map");
    if (t == out.id.end()) throw Error(ErrorCode::SyntaxError, "unknown point '" + to + "' in map");
    out.successor[f->second] = t->second;
  }
  for (int b = 0; b < kBranches; ++b) {
    for (const std::string& name : desc.branches[b]) {
      if (out.successor[out.id.at(name)] < 0) {
        throw Error(ErrorCode::SyntaxError, "point '" + name + "' has no image in map");
      }
    }
  }
  return out;
}

}  // namespace

void validate(const PatternDescription& desc) { (void)to_pattern(desc); }

Pattern to_pattern(const PatternDescription& desc) {
  IndexedDescription idx = index_description(desc);
  return Pattern::create(idx.counts, std::move(idx.successor));
}

std::string point_name(int branch, int rank) {
  return std::string(1, kBranchLetters[branch]) + std::to_string(rank);
}

namespace {

std::string name_of(const Pattern& p, int id) { return point_name(p.branch_of(id), p.rank_of(id)); }

}  // namespace

std::string serialize(const Pattern& p) {
  std::string out = "period: " + std::to_string(p.period()) + "\n";
  for (int b = 0; b < kBranches; ++b) {
    out += "branch" + std::to_string(b) + ":";
    for (int r = 1; r <= p.count(b); ++r) out += " " + point_name(b, r);
    out += "\n";
  }
  // One map line per branch group keeps long patterns readable.
  for (int b = 0; b < kBranches; ++b) {
    out += "map:";
    for (int r = 1; r <= p.count(b); ++r) {
      const int id = p.id_of(b, r);
      out += " " + name_of(p, id) + "->" + name_of(p, p.successor(id));
    }
    out += "\n";
  }
  return out;
}

Pattern parse(const std::string& text) {
  PatternDescription desc;
  std::array<bool, kBranches> have_branch{};
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": expected 'key: value'");
    }
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (key == "period") {
      if (desc.period) throw Error(ErrorCode::SyntaxError, "duplicate period line");
      try {
        std::size_t used = 0;
        desc.period = std::stoi(value, &used);
        if (used != value.size() || *desc.period <= 0) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": bad period '" + value + "'");
      }
    } else if (key.size() == 7 && key.starts_with("branch") && key[6] >= '0' && key[6] <= '2') {
      const int b = key[6] - '0';
      if (have_branch[b]) throw Error(ErrorCode::SyntaxError, "duplicate " + key + " line");
      have_branch[b] = true;
      desc.branches[b] = split_ws(value);
    } else if (key == "map") {
      // Normalise "A -> B" to "A->B" before tokenising.
      std::vector<std::string> raw = split_ws(value);
      std::vector<std::string> tokens;
      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == "->" && !tokens.empty() && i + 1 < raw.size()) {
          tokens.back() += "->" + raw[++i];
        } else if (raw[i].ends_with("->") && i + 1 < raw.size()) {
          tokens.push_back(raw[i] + raw[i + 1]);
          ++i;
        } else if (raw[i].starts_with("->") && !tokens.empty()) {
          tokens.back() += raw[i];
        } else {
          tokens.push_back(raw[i]);
        }
      }
      for (const std::string& tok : tokens) {
        const auto arrow = tok.find("->");
        if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= tok.size()) {
          throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": bad map entry '" + tok + "'");
        }
        std::string from = tok.substr(0, arrow);
        std::string to = tok.substr(arrow + 2);
        if (!desc.successor.emplace(from, to).second) {
          throw Error(ErrorCode::SyntaxError, "point '" + from + "' mapped twice");
        }
      }
    } else {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!desc.period) throw Error(ErrorCode::SyntaxError, "missing 'period:' line");
  return to_pattern(desc);
}

std::string to_json(const Pattern& p) {
  nlohmann::ordered_json j;
  j["period"] = p.period();
  nlohmann::ordered_json branches = nlohmann::ordered_json::array();
  nlohmann::ordered_json succ = nlohmann::ordered_json::object();
  for (int b = 0; b < kBranches; ++b) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (int r = 1; r <= p.count(b); ++r) {
      const int id = p.id_of(b, r);
      list.push_back(name_of(p, id));
      succ[name_of(p, id)] = name_of(p, p.successor(id));
    }
    branches.push_back(std::move(list));
  }
  j["branches"] = std::move(branches);
  j["successor"] = std::move(succ);
  return j.dump();
}

Pattern parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("invalid JSON: ") + e.what());
  }
  PatternDescription desc;
  try {
    desc.period = j.at("period").get<int>();
    const auto& branches = j.at("branches");
    if (!branches.is_array() || branches.size() != kBranches) {
      throw Error(ErrorCode::SyntaxError, "'branches' must be an array of three arrays");
    }
    for (int b = 0; b < kBranches; ++b) {
      desc.branches[b] = branches[b].get<std::vector<std::string>>();
    }
    for (const auto& [from, to] : j.at("successor").items()) {
      desc.successor.emplace(from, to.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed pattern JSON: ") + e.what());
  }
  return to_pattern(desc);
}

Pattern parse_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse(text);
}

}  // namespace triodyn
