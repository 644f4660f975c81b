#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "triodyn/error.hpp"
#include "triodyn/harness.hpp"

using namespace triodyn;

namespace {

// Single n-cycles among all permutations, times the weak compositions of n
// into three parts.
std::uint64_t brute_candidate_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t cycles = 0;
  do {
    int len = 0, x = 0;
    do {
      x = perm[x];
      ++len;
    } while (x != 0);
    cycles += len == n;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::uint64_t compositions = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) ++compositions;
  return cycles * compositions;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("triodyn_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Enumerate, CountsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_patterns(n);
    EXPECT_EQ(all.size(), brute_candidate_count(n)) << n;
    EXPECT_EQ(closed_form_pattern_count(n), brute_candidate_count(n)) << n;
    EXPECT_EQ(std::set<Pattern>(all.begin(), all.end()).size(), all.size());
  }
}

TEST(Enumerate, ParallelOrderIsStable) {
  EnumerationFilter f;
  f.regular = true;
  EXPECT_EQ(enumerate_patterns(6, f, 1), enumerate_patterns(6, f, 4));
}

TEST(Enumerate, RegularFilterAndCanonicalization) {
  EnumerationFilter f;
  f.regular = true;
  for (int n = 3; n <= 6; ++n) {
    for (const Pattern& p : enumerate_patterns(n, f)) {
      EXPECT_TRUE(is_regular(p));
      EXPECT_NO_THROW(canonicalize(p));
    }
  }
}

TEST(Enumerate, PeriodThreeTernary) {
  EnumerationFilter f;
  f.regular = true;
  f.cls = RotationClass::ternary;
  const auto three = enumerate_patterns(3, f);
  ASSERT_FALSE(three.empty());
  for (const Pattern& p : three) EXPECT_EQ(canonicalize(p).pattern, fixtures::primitive3());
  // f_P^3 is the identity for the primitive 3-cycle, so nothing survives exact.
  f.exact = true;
  EXPECT_TRUE(enumerate_patterns(3, f).empty());
}

TEST(Enumerate, ExactTernaryPeriodSixColorBalance) {
  EnumerationFilter f;
  f.exact = true;
  f.cls = RotationClass::ternary;
  const auto six = enumerate_patterns(6, f);
  ASSERT_FALSE(six.empty());
  for (const Pattern& p : six) {
    const auto col = colors(canonical_or_self(p));
    const auto red = std::count(col.begin(), col.end(), ArrowColor::red);
    const auto green = std::count(col.begin(), col.end(), ArrowColor::green);
    EXPECT_EQ(red, green);
    EXPECT_GE(red, 1);
  }
}

TEST(Enumerate, UpToRotation) {
  EnumerationFilter f;
  f.regular = true;
  const auto all = enumerate_patterns(5, f);
  f.up_to_rotation = true;
  const auto reps = enumerate_patterns(5, f);
  EXPECT_LT(reps.size(), all.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(equal_up_to_rotation(reps[i], reps[j]));
  for (const Pattern& p : all) {
    EXPECT_TRUE(std::any_of(reps.begin(), reps.end(), [&](const Pattern& r) { return equal_up_to_rotation(p, r); }));
  }
}

TEST(Enumerate, RegularCountsUpToSeven) {
  const auto reg = regular_patterns_up_to(7);
  std::map<int, int> by_period;
  for (const Pattern& p : reg) ++by_period[p.period()];
  EXPECT_EQ(by_period[3], 2);
  EXPECT_EQ(by_period[4], 6);
  EXPECT_EQ(by_period[5], 18);
  EXPECT_EQ(by_period[6], 58);
  EXPECT_EQ(reg.size(), 294u);
}

TEST(Parallel, PreservesIndexOrderAndPropagatesErrors) {
  const auto squares = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < squares.size(); ++i) EXPECT_EQ(squares[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_map<int>(10, 3,
                                 [](std::size_t i) -> int {
                                   if (i == 7) throw Error(ErrorCode::OutOfDomain, "seven");
                                   return 0;
                                 }),
               Error);
}

TEST(Parallel, DefaultJobsReadsEnvironment) {
  setenv("TRIODYN_JOBS", "3", 1);
  EXPECT_EQ(default_jobs(), 3);
  setenv("TRIODYN_JOBS", "zero", 1);
  EXPECT_GE(default_jobs(), 1);
  unsetenv("TRIODYN_JOBS");
  EXPECT_GE(default_jobs(), 1);
}

TEST(Verify, SmallRunsPass) {
  EXPECT_TRUE(verify_ordering(RotationClass::slow, 5, 9).ok());
  EXPECT_TRUE(verify_ordering(RotationClass::fast, 5, 9).ok());
  EXPECT_TRUE(verify_exactness_oracle(5).ok());
  EXPECT_TRUE(verify_ternary_colors(6).ok());
}

TEST(Verify, EnlargingTheCapKeepsPasses) {
  const auto small = verify_ordering(RotationClass::slow, 5, 8);
  const auto large = verify_ordering(RotationClass::slow, 5, 11);
  EXPECT_TRUE(small.ok());
  EXPECT_EQ(small.total, large.total);
  EXPECT_TRUE(large.ok());
}

TEST(Verify, MrpHullGapsEmptyForTwists) {
  EXPECT_TRUE(mrp_hull_gaps(fixtures::lambda29(), 10).empty());
  EXPECT_TRUE(mrp_hull_gaps(fixtures::psi25(), 10).empty());
}

TEST(Verify, MrpHullGapsUseCanonicalLabeling) {
  // All arrows of this labeling are red or green, so odd turn counts never
  // occur; the canonical labeling has no gaps.
  const Pattern p = parse(
      "period: 6\nbranch0: p1 p2\nbranch1: q1\nbranch2: r1 r2 r3\n"
      "map: p1->r3 p2->p1 q1->p2 r1->q1 r2->r1 r3->r2\n");
  ASSERT_TRUE(is_regular(p));
  EXPECT_NE(canonical_or_self(p), p);
  EXPECT_TRUE(mrp_hull_gaps(p, 10).empty());
  for (const Pattern& q : regular_patterns_up_to(6)) EXPECT_TRUE(mrp_hull_gaps(q, 10).empty()) << serialize(q);
}

TEST(Verify, TwistCorpus) {
  const auto corpus = twist_corpus();
  EXPECT_FALSE(corpus.empty());
  for (const Pattern& p : corpus) {
    EXPECT_TRUE(is_order_preserving(p));
    EXPECT_TRUE(is_regular(p));
    EXPECT_LE(p.period(), 10);
  }
}

TEST(Report, EmptyReportJson) {
  VerificationReport r;
  r.theorem = "t";
  r.corpus = "c";
  const auto j = nlohmann::json::parse(report_to_json(r, "stem"));
  EXPECT_EQ(j["passed"], j["total"]);
  EXPECT_TRUE(j["violations"].is_array());
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Report, ViolationWitnessFilesAndCsv) {
  VerificationReport r;
  r.theorem = "demo, with comma";
  r.pass();
  r.fail({"chk", "message", {fixtures::lambda29(), fixtures::psi25()}});
  const auto dir = scratch_dir("report");
  const auto files = report_export(r, ReportFormat::csv, dir / "out.csv");
  ASSERT_EQ(files.size(), 3u);
  const std::string csv = slurp(dir / "out.csv");
  EXPECT_NE(csv.find("violation,\"demo, with comma\",chk,message,out.w0.0.txt;out.w0.1.txt"),
            std::string::npos)
      << csv;
  EXPECT_EQ(parse(slurp(dir / "out.w0.0.txt")), fixtures::lambda29());
  EXPECT_EQ(parse(slurp(dir / "out.w0.1.txt")), fixtures::psi25());

  const auto jfiles = report_export(r, ReportFormat::json, dir / "out.json");
  const auto j = nlohmann::json::parse(slurp(dir / "out.json"));
  EXPECT_EQ(j["failed"], 1);
  EXPECT_EQ(j["violations"][0]["witnesses"][1]["file"], "out.w0.1.txt");
  EXPECT_EQ(jfiles.size(), 3u);
}

TEST(Report, SerializationIsDeterministic) {
  const auto a = verify_ordering(RotationClass::fast, 5, 9, 1);
  const auto b = verify_ordering(RotationClass::fast, 5, 9, 3);
  EXPECT_EQ(report_to_json(a, "x"), report_to_json(a, "x"));
  EXPECT_EQ(report_to_json(a, "x"), report_to_json(b, "x"));
  EXPECT_EQ(report_to_csv(a, "x"), report_to_csv(b, "x"));
}

TEST(Report, UnwritablePathIsIoError) {
  VerificationReport r;
  try {
    report_export(r, ReportFormat::json, "/nonexistent-dir/sub/report.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}
