#include <fstream>

#include <json.hpp>

#include "triodyn/error.hpp"
#include "triodyn/harness.hpp"

namespace triodyn {

namespace {

std::string witness_name(const std::string& stem, std::size_t v, std::size_t w) {
  return stem + ".w" + std::to_string(v) + "." + std::to_string(w) + ".txt";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
}

}  // namespace

std::string report_to_json(const VerificationReport& r, const std::string& stem) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["corpus"] = r.corpus;
  j["pattern_bound"] = r.pattern_bound;
  j["cycle_cap"] = r.cycle_cap;
  j["total"] = r.total;
  j["passed"] = r.passed;
  j["failed"] = r.failed();
  j["notes"] = r.notes;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < r.violations.size(); ++v) {
    const Violation& x = r.violations[v];
    nlohmann::ordered_json item;
    item["check"] = x.check;
    item["message"] = x.message;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (std::size_t w = 0; w < x.witnesses.size(); ++w) {
      witnesses.push_back({{"file", witness_name(stem, v, w)}, {"pattern", serialize(x.witnesses[w])}});
    }
    item["witnesses"] = std::move(witnesses);
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& r, const std::string& stem) {
  std::string out = "record,theorem,check,detail,witness\n";
  out += "summary," + csv_field(r.theorem) + ",," +
         csv_field("total=" + std::to_string(r.total) + ";passed=" + std::to_string(r.passed) +
                   ";failed=" + std::to_string(r.failed())) +
         ",\n";
  for (const std::string& note : r.notes) out += "note," + csv_field(r.theorem) + ",," + csv_field(note) + ",\n";
  for (std::size_t v = 0; v < r.violations.size(); ++v) {
    const Violation& x = r.violations[v];
    std::string files;
    for (std::size_t w = 0; w < x.witnesses.size(); ++w) files += (w ? ";" : "") + witness_name(stem, v, w);
    out += "violation," + csv_field(r.theorem) + "," + csv_field(x.check) + "," + csv_field(x.message) + "," +
           csv_field(files) + "\n";
  }
  return out;
}

std::vector<std::filesystem::path> report_export(const VerificationReport& r, ReportFormat format,
                                                 const std::filesystem::path& path) {
  const std::string stem = path.stem().string();
  std::vector<std::filesystem::path> written;
  write_file(path, format == ReportFormat::json ? report_to_json(r, stem) : report_to_csv(r, stem));
  written.push_back(path);
  for (std::size_t v = 0; v < r.violations.size(); ++v) {
    for (std::size_t w = 0; w < r.violations[v].witnesses.size(); ++w) {
      const std::filesystem::path file = path.parent_path() / witness_name(stem, v, w);
      write_file(file, serialize(r.violations[v].witnesses[w]));
      written.push_back(file);
    }
  }
  return written;
}

}  // namespace triodyn
