#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "report.hpp"
#include "richclub/degree_sequence.hpp"
#include "richclub/graph.hpp"

namespace fs = std::filesystem;
using namespace richclub;

namespace {

const fs::path kData = fs::path(__FILE__).parent_path() / "data";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "richclub");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("richclub_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

}  // namespace

TEST(CliAnalyze, StarDefaults) {
  auto r = run({"analyze", "--input", data("star5.edges"), "--ensemble-size", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_EQ(rows[0], cli::kAnalysisColumns);
  EXPECT_EQ(rows[1], "0,5,4,0,0,4,0,0.4,1,,0.6,4,0,0,0,1,");
  EXPECT_EQ(rows[2], "1,1,0,4,0,0,4,,,1,,0,0,4,0,,1");
  EXPECT_NE(r.out.find("# master_seed=0"), std::string::npos);
  EXPECT_NE(r.err.find("analyze:"), std::string::npos);
}

TEST(CliAnalyze, CompleteGraphJson) {
  TempDir dir;
  const auto prefix = (dir / "k4").string();
  auto r = run({"analyze", "--input", data("k4.edges"), "--ensemble-size", "20", "--output",
                prefix, "--format", "both", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(slurp(prefix + ".csv"));
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[1], "0,4,6,0,0,6,0,1,1,,0,6,0,0,0,1,");

  auto doc = nlohmann::json::parse(slurp(prefix + ".json"));
  EXPECT_EQ(doc["provenance"]["master_seed"], 9);
  EXPECT_EQ(doc["provenance"]["tool_version"], cli::kToolVersion);
  EXPECT_EQ(doc["config"]["ensemble_size"], 20);
  ASSERT_EQ(doc["points"].size(), 1U);
  EXPECT_EQ(doc["points"][0]["rho"], 1.0);
  EXPECT_TRUE(doc["points"][0]["rho_bar"].is_null());
  EXPECT_EQ(doc["points"][0]["rho_bar_undefined"], "degenerate_club");
}

TEST(CliAnalyze, ExplicitGridAndErrors) {
  auto r = run({"analyze", "--input", data("star5.edges"), "--ensemble-size", "5", "--k-grid",
                "0,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 4U);

  EXPECT_EQ(run({"analyze", "--input", data("star5.edges"), "--k-grid", "2,1"}).code,
            cli::kExitValidation);
  EXPECT_EQ(run({"analyze", "--input", data("star5.edges"), "--k-grid", "x"}).code,
            cli::kExitInput);
  auto missing = run({"analyze", "--input", data("missing.edges")});
  EXPECT_EQ(missing.code, cli::kExitInput);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
  EXPECT_EQ(run({"analyze"}).code, cli::kExitInput);
  EXPECT_EQ(run({"analyze", "--input", data("star5.edges"), "--format", "xml"}).code,
            cli::kExitInput);
}

TEST(CliAnalyze, BadInputsAndDegenerateGraphs) {
  TempDir dir;
  std::ofstream(dir / "bad.edges") << "a b\nb\n";
  auto bad = run({"analyze", "--input", (dir / "bad.edges").string()});
  EXPECT_EQ(bad.code, cli::kExitInput);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);

  std::ofstream(dir / "one.edges") << "a b\n";
  EXPECT_EQ(run({"analyze", "--input", (dir / "one.edges").string()}).code, cli::kExitValidation);

  std::ofstream(dir / "split.edges") << "a b\nb c\nd e\n";
  EXPECT_EQ(run({"analyze", "--input", (dir / "split.edges").string()}).code, cli::kExitValidation);
  EXPECT_EQ(run({"analyze", "--input", (dir / "split.edges").string(), "--allow-disconnected",
                 "--ensemble-size", "3"})
                .code,
            0);
}

TEST(CliAnalyze, ThreadsFromEnvironment) {
  ::setenv("RICHCLUB_THREADS", "2", 1);
  auto r = run({"analyze", "--input", data("star5.edges"), "--ensemble-size", "4"});
  EXPECT_NE(r.err.find("on 2 thread(s)"), std::string::npos);
  ::setenv("RICHCLUB_THREADS", "zero", 1);
  EXPECT_EQ(run({"analyze", "--input", data("star5.edges")}).code, cli::kExitInput);
  ::unsetenv("RICHCLUB_THREADS");
}

TEST(CliDyadic, PathAdjacentPair) {
  auto r = run({"dyadic", "--input", data("path3.edges"), "--attributes",
                data("path3_adjacent.attr")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0], cli::kDyadicColumns);
  EXPECT_EQ(rows[1], "2,1,1,1,0,0.666666666667,1.33333333333,1.5,0.75,1,2");

  auto json = run({"dyadic", "--input", data("path3.edges"), "--attributes",
                   data("path3_adjacent.attr"), "--format", "json"});
  auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["dyadicity"], 1.5);
  EXPECT_EQ(doc["heterophilicity"], 0.75);
}

TEST(CliDyadic, UndefinedAndMismatchedAttributes) {
  TempDir dir;
  std::ofstream(dir / "zeros.attr") << "a\t0\nb\t0\nc\t0\n";
  auto zeros = run({"dyadic", "--input", data("path3.edges"), "--attributes",
                    (dir / "zeros.attr").string(), "--format", "json"});
  ASSERT_EQ(zeros.code, 0) << zeros.err;
  auto doc = nlohmann::json::parse(zeros.out);
  EXPECT_TRUE(doc["dyadicity"].is_null());
  EXPECT_TRUE(doc["heterophilicity"].is_null());

  std::ofstream(dir / "short.attr") << "a\t1\nb\t0\n";
  auto missing = run({"dyadic", "--input", data("path3.edges"), "--attributes",
                      (dir / "short.attr").string()});
  EXPECT_EQ(missing.code, cli::kExitInput);
  EXPECT_NE(missing.err.find("'c'"), std::string::npos);

  std::ofstream(dir / "extra.attr") << "a\t1\nb\t0\nc\t0\nz\t1\n";
  auto extra = run({"dyadic", "--input", data("path3.edges"), "--attributes",
                    (dir / "extra.attr").string()});
  EXPECT_EQ(extra.code, cli::kExitInput);
  EXPECT_NE(extra.err.find("'z'"), std::string::npos);

  std::ofstream(dir / "two.attr") << "a\t1\nb\t2\nc\t0\n";
  EXPECT_EQ(run({"dyadic", "--input", data("path3.edges"), "--attributes",
                 (dir / "two.attr").string()})
                .code,
            cli::kExitInput);
}

TEST(CliBounds, SequenceAndChecks) {
  auto r = run({"bounds", "--sequence", "4 1 1 1 1", "--n1", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{cli::kBoundsColumns, "3,2,3,4,2,4"}));

  auto odd = run({"bounds", "--sequence", "3 1 1", "--check-graphic", "--n1", "1"});
  EXPECT_EQ(odd.code, cli::kExitValidation);
  EXPECT_NE(odd.err.find("odd degree sum"), std::string::npos);

  auto eg = run({"bounds", "--sequence", "3 3 1 1", "--check-graphic", "--sweep"});
  EXPECT_EQ(eg.code, cli::kExitValidation);
  EXPECT_NE(eg.err.find("Erdos-Gallai"), std::string::npos);

  auto warn = run({"bounds", "--sequence", "3 1 1", "--n1", "1"});
  EXPECT_EQ(warn.code, 0);
  EXPECT_NE(warn.err.find("warning"), std::string::npos);

  EXPECT_EQ(run({"bounds", "--sequence", "3 1 1"}).code, cli::kExitInput);
  EXPECT_EQ(run({"bounds", "--sequence", "3 x 1", "--n1", "1"}).code, cli::kExitInput);
  EXPECT_EQ(run({"bounds", "--sequence", "2 2 2", "--n1", "4"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"bounds", "--sequence", "2 -2 2", "--n1", "1"}).code, cli::kExitValidation);
}

TEST(CliBounds, SweepOverCompleteGraphIsMonotone) {
  auto r = run({"bounds", "--input", data("k4.edges"), "--sweep", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 5U);
  std::uint64_t previous = 0;
  for (const auto& row : doc) {
    EXPECT_GE(row["ub_m11"].get<std::uint64_t>(), previous);
    previous = row["ub_m11"];
  }
  EXPECT_EQ(doc[4]["ub_m11"], 6);
  EXPECT_EQ(doc[2]["ub_m10"], 4);
}

TEST(CliBounds, DegreesFile) {
  auto r = run({"bounds", "--degrees", data("star5.degrees"), "--n1", "1,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{cli::kBoundsColumns, "1,4,0,4,0,4", "3,2,3,4,2,4"}));
}

TEST(CliRandomize, DeterministicAndDegreePreserving) {
  TempDir d;
  std::ofstream src(d / "ring.edges");
  for (int v = 0; v < 30; ++v) {
    src << "n" << v << " n" << (v + 1) % 30 << "\n" << "n" << v << " n" << (v + 7) % 30 << "\n";
    if (v < 10) src << "hub n" << v << "\n";
  }
  src.close();
  const auto input = (d / "ring.edges").string();
  ASSERT_EQ(run({"randomize", "--input", input, "--output", (d / "a.edges").string(), "--seed", "4"}).code, 0);
  ASSERT_EQ(run({"randomize", "--input", input, "--output", (d / "b.edges").string(), "--seed", "4"}).code, 0);
  EXPECT_EQ(slurp(d / "a.edges"), slurp(d / "b.edges"));

  Graph original = load_edge_list_file(input, {true});
  Graph rewired = load_edge_list_file((d / "a.edges").string(), {true});
  EXPECT_EQ(degree_sequence(rewired), degree_sequence(original));
  for (NodeId v = 0; v < original.node_count(); ++v)
    EXPECT_EQ(rewired.degree(*rewired.find(original.label(v))), original.degree(v));

  // Re-ingestible by analyze.
  auto again = run({"analyze", "--input", (d / "a.edges").string(), "--allow-disconnected",
                    "--ensemble-size", "5"});
  EXPECT_EQ(again.code, 0) << again.err;

  ASSERT_EQ(run({"randomize", "--input", input, "--output", (d / "r.edges").string(), "--count", "3"}).code, 0);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(fs::exists(d / ("r_" + std::to_string(i) + ".edges")));
  EXPECT_NE(slurp(d / "r_0.edges"), slurp(d / "r_1.edges"));
}

TEST(CliRandomize, CompleteGraphUnchangedAndErrors) {
  auto r = run({"randomize", "--input", data("k4.edges")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  EXPECT_EQ(rows, (std::vector<std::string>{"a b", "a c", "a d", "b c", "b d", "c d"}));

  TempDir dir;
  std::ofstream(dir / "one.edges") << "a b\n";
  EXPECT_EQ(run({"randomize", "--input", (dir / "one.edges").string()}).code, cli::kExitValidation);
  EXPECT_EQ(run({"randomize", "--input", data("k4.edges"), "--count", "2"}).code, cli::kExitInput);
}

TEST(CliReport, NumberFormatting) {
  EXPECT_EQ(cli::format_number(0.4), "0.4");
  EXPECT_EQ(cli::format_number(1.0), "1");
  EXPECT_EQ(cli::format_number(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(cli::format_number(1234567.891234567), "1234567.89123");
  EXPECT_EQ(cli::format_optional(std::nullopt), "");
}

TEST(Cli, HelpAndUnknownCommand) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInput);
  EXPECT_EQ(run({}).code, cli::kExitInput);
}
