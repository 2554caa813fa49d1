#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "../tools/cli.hpp"
#include "hitting/exact.hpp"
#include "hitting/generators.hpp"
#include "hitting/graph_io.hpp"

using namespace hitting;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("hitting_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("sha256 of a known string") {
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("version and usage errors") {
  auto r = run({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out == std::string(cli::kVersion) + "\n");
  CHECK(run({}).code == cli::kValidationFailure);
  CHECK(run({"bogus"}).code == cli::kValidationFailure);
  r = run({"analyze", "/nonexistent.json"});
  CHECK(r.code == cli::kValidationFailure);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("generate writes the graph and a manifest sidecar") {
  TempDir dir;
  const auto path = dir.file("p.json");
  const auto r = run({"generate", "unit_path", "--n", "5", "--out", path});
  REQUIRE(r.code == 0);
  const auto text = read_file(path);
  CHECK(text == serialize_graph(unit_path(5)));
  const auto m = nlohmann::json::parse(read_file(path + ".manifest.json"));
  CHECK(m["command"] == "generate");
  CHECK(m["version"] == cli::kVersion);
  CHECK(m["parameters"]["n"] == 5);
  CHECK(m["outputs"][0] == path);
}

TEST_CASE("generate refuses oversized graphs") {
  const auto r = run({"generate", "fast_path", "--n", "5000", "--max-vertices", "100"});
  CHECK(r.code == cli::kValidationFailure);
  CHECK(r.err.find("pass --max-vertices 5001 or more") != std::string::npos);
  CHECK(run({"generate", "fast_path", "--n", "3", "--g", "2"}).code == cli::kValidationFailure);
  CHECK(run({"generate", "recurrent_tree_line", "--g", "2", "--depths", "25", "--max-vertices", "1000"}).code ==
        cli::kValidationFailure);
}

TEST_CASE("generate builds every family") {
  CHECK(run({"generate", "biased_line", "--n", "4", "--g", "2", "--tail", "3"}).code == 0);
  CHECK(run({"generate", "fast_path", "--n", "40", "--p", "1"}).code == 0);
  CHECK(run({"generate", "recurrent_tree_line", "--g", "2", "--depths", "1,2,0"}).code == 0);
  const auto r = run({"generate", "concatenated_fast", "--first-cut", "4", "--blocks", "3"});
  REQUIRE(r.code == 0);
  CHECK(parse_graph(r.out).vertex_count() == 257);
  const auto rnd = run({"generate", "random", "--seed", "12"});
  REQUIRE(rnd.code == 0);
  CHECK(rnd.out == serialize_graph(random_graph(12)));
}

TEST_CASE("analyze reports exact values and bound checks") {
  TempDir dir;
  const auto path = dir.file("p.json");
  write_file_atomic(path, serialize_graph(unit_path(5)));
  const auto r = run({"analyze", path, "--beta-grid", "0.5,1"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["report"]["expected_T"].get<double>() == doctest::Approx(25.0));
  CHECK(doc["report"]["resistance"].get<double>() == doctest::Approx(5.0));
  CHECK(doc["report"]["bounds"]["violations"] == 0);
  CHECK(doc["manifest"]["inputs"][0]["sha256"] == cli::sha256_hex(read_file(path)));
  CHECK(run({"analyze", path, "--beta-grid", "1.5"}).code == cli::kValidationFailure);
}

TEST_CASE("analyze rejects adjacent endpoints") {
  TempDir dir;
  const auto path = dir.file("e.json");
  write_file_atomic(path, serialize_graph(unit_path(1)));
  const auto r = run({"analyze", path});
  CHECK(r.code == cli::kValidationFailure);
  CHECK(r.err.find("dist(o,z) = 1") != std::string::npos);
}

TEST_CASE("decompose audits the flow") {
  TempDir dir;
  const auto path = dir.file("r.json");
  write_file_atomic(path, serialize_graph(random_graph(3)));
  const auto r = run({"decompose", path, "--beta", "0.6"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["residuals"]["passed"] == true);
  CHECK(doc["residuals"]["node_law_residual"].get<double>() < 1e-10);
  CHECK(doc["parameters"]["S"].get<double>() ==
        doctest::Approx(survival_transform(contract_targets(random_graph(3)), 0.6)));
  CHECK(run({"decompose", path, "--beta", "1"}).code == cli::kValidationFailure);
  CHECK(run({"decompose", path}).code == cli::kValidationFailure);
}

TEST_CASE("simulate is byte-identical for a fixed seed") {
  TempDir dir;
  const auto path = dir.file("r.json");
  write_file_atomic(path, serialize_graph(random_graph(8)));
  const auto a = run({"simulate", path, "--seed", "5", "--reps", "500", "--threads", "1"});
  const auto b = run({"simulate", path, "--seed", "5", "--reps", "500", "--threads", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("replication,statistic,k_or_T,value,censored\n", 0) == 0);
  const auto out = dir.file("s.csv");
  const auto c = run({"simulate", path, "--seed", "5", "--reps", "500", "--out", out});
  REQUIRE(c.code == 0);
  CHECK(read_file(out) == a.out);
  CHECK(fs::exists(out + ".manifest.json"));
  CHECK(nlohmann::json::parse(c.out).contains("summary"));
  CHECK(run({"simulate", path, "--statistic", "nope"}).code == cli::kValidationFailure);
}

TEST_CASE("simulate escape ratios respect the safe horizon") {
  TempDir dir;
  const auto path = dir.file("line.json");
  write_file_atomic(path, serialize_graph(unit_path(50)));
  CHECK(run({"simulate", path, "--statistic", "speed", "--record", "10,50", "--reps", "20"}).code == 0);
  CHECK(run({"simulate", path, "--statistic", "speed", "--record", "10,51", "--reps", "20"}).code ==
        cli::kValidationFailure);
}

TEST_CASE("sweep prints one row per n") {
  const auto r = run({"sweep", "--family", "fast_path", "--p", "0", "--n-list", "10,100", "--max-vertices", "50"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header == "n,g_minus_1,closed_form_ET,exact_ET,mean_bound,ratio_to_asymptotic");
  CHECK(row1.rfind("10,", 0) == 0);
  // The exact column is blank above the vertex cap.
  CHECK(row2.find(",,") != std::string::npos);
  CHECK(run({"sweep", "--n-list", "100", "--max-vertices", "50", "--exact"}).code == cli::kValidationFailure);
  CHECK(run({"sweep", "--family", "tree", "--n-list", "10"}).code == cli::kValidationFailure);
  CHECK(run({"sweep", "--family", "unit_path", "--n-list", "10"}).code == 0);
}

TEST_CASE("corpus check reports no violations") {
  cli::CorpusCheckOptions opt;
  opt.count = 30;
  const auto doc = cli::corpus_check(opt);
  CHECK(doc["violations"] == 0);
  const auto r = run({"corpus-check", "--count", "5"});
  CHECK(r.code == 0);
}

TEST_CASE("swapping endpoints") {
  const auto g = unit_path(3);
  const auto s = cli::swap_endpoints(g);
  CHECK(s.label(s.origin()) == "3");
  CHECK(s.label(s.targets()[0]) == "0");
  CHECK(expected_hitting_time(s) == doctest::Approx(9.0));
}
