#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "tss/catalog.hpp"
#include "tss/error.hpp"
#include "tss/report.hpp"

using namespace tss;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tss");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json result_of(const Run& r) { return Json::parse(r.out).at("result"); }

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--group", "S4", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"}).code == cli::kPass);
  const auto negative = run({"verify", "--group", "S4", "(1 2)", "(3 4)", "(1 3)", "--format", "json"});
  CHECK(negative.code == cli::kNegative);
  CHECK(result_of(negative).at("unrealized_permutation") == "[1,3,2]");
  CHECK(run({"verify", "--group", "S3", "(1 2)"}).code == cli::kPass);
}

TEST_CASE("input errors exit 2 with a location") {
  const auto bad = run({"verify", "--group", "S3", "(1 2"});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("offset 4") != std::string::npos);
  CHECK(run({"verify", "--group", "S3", "(1 2)(3 4)"}).code == cli::kInputError);
  CHECK(run({"verify", "--group", "S4", "(1 2)", "(1 2)"}).code == cli::kInputError);
  CHECK(run({"verify", "--group", "Z9", "(1 2)"}).code == cli::kInputError);
  CHECK(run({"verify", "(1 2)"}).code == cli::kInputError);
  CHECK(run({"search", "--group", "S4"}).code == cli::kInputError);
  CHECK(run({"search", "--group", "S4", "--size", "2", "--budget", "0"}).code == cli::kInputError);
  CHECK(run({"search", "--group-file", "/no/such/file.grp", "--size", "2"}).code == cli::kInputError);
  CHECK(run({"theorems", "hoelder", "--n", "4", "--m", "5"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("search documents") {
  const auto s6 = run({"search", "--group", "S6", "--size", "5", "--format", "json"});
  REQUIRE(s6.code == cli::kPass);
  CHECK(result_of(s6).at("class_count") == 2);

  const auto s3 = run({"search", "--group", "S3", "--size", "3", "--format", "json"});
  const auto classes = result_of(s3).at("classes");
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].at("representative") == Json::array({"(2 3)", "(1 2)", "(1 3)"}));

  const auto d5 = run({"search", "--group-file", TSS_DATA_DIR "/groups/D5.grp", "--size", "2", "--format", "json"});
  REQUIRE(d5.code == cli::kPass);
  CHECK(result_of(d5).at("total_count") == 12);
  CHECK(Json::parse(d5.out).at("config").at("group") == TSS_DATA_DIR "/groups/D5.grp");

  const auto flat = run({"search", "--group", "S4", "--size", "3", "--no-up-to-conjugacy", "--format", "json"});
  CHECK(result_of(flat).at("class_count") == 9);
}

TEST_CASE("budget exhaustion exits 3 with partial results marked") {
  const auto r = run({"search", "--group", "S7", "--size", "6", "--budget", "0.001", "--format", "json"});
  CHECK(r.code == cli::kBudget);
  CHECK(result_of(r).at("complete") == false);
}

TEST_CASE("theorem commands") {
  const auto h = run({"theorems", "hoelder", "--n", "6", "--m", "6", "--format", "json"});
  CHECK(h.code == cli::kPass);
  CHECK(result_of(h).at("out_order") == 2);
  const auto b = run({"theorems", "bound", "--max-order", "119", "--format", "json"});
  CHECK(b.code == cli::kPass);
  for (const auto& g : result_of(b).at("groups")) CHECK(g.at("max_tss").get<int>() <= 3);
  const auto c = run({"theorems", "classify", "--n", "4", "--format", "json"});
  CHECK(c.code == cli::kPass);
  CHECK(result_of(c).at("search").at("class_count") == 3);
  const auto human = run({"theorems", "classify", "--n", "5"});
  CHECK(human.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("output goes to --out when given") {
  const auto path = std::filesystem::temp_directory_path() / "tss-cli-out-test.json";
  const auto r = run({"search", "--group", "S4", "--size", "2", "--format", "json", "--out", path.string()});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = Json::parse(in);
  CHECK(doc.at("tool") == "tss");
  CHECK(doc.at("result").at("k") == 2);
  std::filesystem::remove(path);
}

TEST_CASE("documents are identical across worker counts and carry no wall time by default") {
  for (const std::vector<std::string> cmd :
       {std::vector<std::string>{"search", "--group", "S6", "--size", "4", "--format", "json"},
        std::vector<std::string>{"theorems", "bound", "--max-order", "40", "--format", "json"}}) {
    auto one = cmd;
    one.insert(one.end(), {"--jobs", "1"});
    auto many = cmd;
    many.insert(many.end(), {"--jobs", "8"});
    const auto a = run(one);
    const auto b = run(many);
    CHECK(a.out == b.out);
    CHECK_FALSE(Json::parse(a.out).contains("wall_seconds"));
  }
  auto timed = run({"search", "--group", "S4", "--size", "2", "--format", "json", "--timing"});
  CHECK(Json::parse(timed.out).contains("wall_seconds"));
  CHECK(timed.err.find("wall time") != std::string::npos);
}

TEST_CASE("structured output round-trips") {
  RunConfig config;
  config.command = "search";
  config.group_source = "S5";
  config.k = 4;
  config.budget_seconds = 12.5;
  config.format = "json";
  config.up_to_conjugacy = false;
  config.max_order = 60;
  CHECK(run_config_from_json(Json::parse(to_json(config).dump())) == config);

  const auto g = symmetric_group(5);
  for (const bool dedup : {true, false}) {
    SearchOptions o;
    o.up_to_conjugacy = dedup;
    const auto report = enumerate_tss(g, 3, o);
    const auto text = to_json(g, report).dump();
    const auto back = tss_class_report_from_json(g, Json::parse(text));
    CHECK(to_json(g, back).dump() == text);
    REQUIRE(back.classes.size() == report.classes.size());
    for (std::size_t i = 0; i < back.classes.size(); ++i) {
      CHECK(back.classes[i].representative == report.classes[i].representative);
      CHECK(back.classes[i].certificate.witnesses == report.classes[i].certificate.witnesses);
    }
  }
  CHECK_THROWS_AS(tss_class_report_from_json(g, Json::parse("{}")), ParseError);
}
