#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "minorforge/graph_io.hpp"
#include "minorforge_cli/app.hpp"
#include "minorforge_cli/records.hpp"

namespace fs = std::filesystem;
using minorforge::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(MINORFORGE_SCRATCH_DIR) / "cli_scratch";
  fs::create_directories(dir);
  return dir / name;
}

std::string generate(const std::string& name, const std::vector<std::string>& gen_args) {
  const fs::path p = scratch(name);
  std::vector<std::string> args{"gen"};
  args.insert(args.end(), gen_args.begin(), gen_args.end());
  args.push_back("--out");
  args.push_back(p.string());
  REQUIRE(call(args).code == 0);
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("fnv1a") {
  CHECK(minorforge::cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(minorforge::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("gen writes a parseable graph with a comment line") {
  const Outcome o = call({"gen", "--family", "tfp", "--n", "30", "--seed", "4"});
  REQUIRE(o.code == 0);
  CHECK(o.out.rfind("c minorforge gen family=tfp n=30 seed=4\n", 0) == 0);
  const auto g = minorforge::parse_graph(o.out);
  CHECK(g.vertex_count() == 30);
  CHECK(call({"gen", "--family", "tfp", "--n", "30", "--seed", "4"}).out == o.out);
  CHECK(call({"gen", "--family", "tfp", "--n", "30", "--seed", "5"}).out != o.out);
  CHECK(call({"gen", "--named", "five_wheel"}).code == 0);
  CHECK(call({"gen", "--named", "nope"}).code == minorforge::cli::kInputError);
  CHECK(call({"gen"}).code == minorforge::cli::kInputError);
}

TEST_CASE("MINORFORGE_SEED supplies the default seed") {
  ::setenv("MINORFORGE_SEED", "4", 1);
  const Outcome env = call({"gen", "--family", "tfp", "--n", "30"});
  ::unsetenv("MINORFORGE_SEED");
  CHECK(env.out == call({"gen", "--family", "tfp", "--n", "30", "--seed", "4"}).out);
}

TEST_CASE("analyze") {
  const std::string wheel = generate("wheel.txt", {"--named", "five_wheel"});
  const Outcome o = call({"analyze", wheel, "--k", "2", "--format", "records"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["command"] == "analyze");
  CHECK(j["vertices"] == 6);
  CHECK(j["five_wheel"] == true);
  CHECK(j["omega_proven"] == true);
  CHECK(j["input_fnv1a"] == minorforge::cli::fnv1a_hex(slurp(wheel)));
  CHECK(j["seagull_conditions"]["five_wheel"] == "fails");
  CHECK(j["seagull_conditions"]["all_hold"] == false);

  const Outcome text = call({"analyze", wheel});
  CHECK(text.code == 0);
  CHECK(text.out.find("omega: ") != std::string::npos);
}

TEST_CASE("build-minor record") {
  const std::string g = generate("tfp120.txt", {"--family", "tfp", "--n", "120", "--seed", "2"});
  const std::string h_path = scratch("h.txt").string();
  const std::string map_path = scratch("map.txt").string();
  const std::string gull_path = scratch("gulls.txt").string();
  const Outcome o = call({"build-minor", g, "--mode", "advisory", "--seed", "9", "--format", "records", "--out-h", h_path,
                          "--out-map", map_path, "--out-seagulls", gull_path});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["h_vertices"] == 60);
  CHECK(j["verify_minor"] == true);
  CHECK(j["accounting_exact"] == true);
  CHECK(j["unclassified_missing"] == 0);
  CHECK(j["mode"] == "advisory");
  CHECK(j["certificate"]["status"] == "NotCertifiable");
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(minorforge::parse_graph(slurp(h_path)).vertex_count() == 60);
  CHECK(j["h_edges"] == minorforge::parse_graph(slurp(h_path)).edge_count());
  CHECK(slurp(map_path).rfind("part 1:", 0) == 0);
  CHECK(j["s_size"].get<int>() == 3 * j["preconditions"]["k"].get<int>());

  // Byte-identical reruns.
  CHECK(call({"build-minor", g, "--mode", "advisory", "--seed", "9", "--format", "records"}).out == o.out);
  const Json timed = Json::parse(
      call({"build-minor", g, "--mode", "advisory", "--seed", "9", "--format", "records", "--timing"}).out);
  CHECK(timed.contains("wall_seconds"));
}

TEST_CASE("odd order in build-minor") {
  const std::string g = generate("tfp121.txt", {"--family", "tfp", "--n", "121", "--seed", "2"});
  const Outcome o = call({"build-minor", g, "--mode", "advisory", "--format", "records"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["h_vertices"] == 61);
  CHECK(j["added_vertex"] == 1);
  CHECK(j["verify_minor"] == true);
}

TEST_CASE("exit codes") {
  using namespace minorforge::cli;
  CHECK(call({"analyze", scratch("missing.txt").string()}).code == kInputError);
  {
    std::ofstream bad(scratch("bad.txt"));
    bad << "p 3 1\n1 9\n";
  }
  CHECK(call({"analyze", scratch("bad.txt").string()}).code == kInputError);
  CHECK(call({"frobnicate"}).code == kInputError);
  CHECK(call({"gamma", "--tolerance", "0"}).code == kInputError);

  const std::string blow = generate("c5x2.txt", {"--family", "c5blowup", "--t", "2"});
  const Outcome dense = call({"build-minor", blow});
  CHECK(dense.code == kIneligible);
  CHECK(dense.err.find("complete minor") != std::string::npos);
  const std::string petersen = generate("petersen.txt", {"--named", "petersen"});
  CHECK(call({"build-minor", petersen}).code == kIneligible);
  const std::string small = generate("tfp60.txt", {"--family", "tfp", "--n", "60", "--seed", "1"});
  CHECK(call({"build-minor", small, "--mode", "advisory"}).code == kIneligible);
  const std::string tfp = generate("tfp120e.txt", {"--family", "tfp", "--n", "120", "--seed", "2"});

  int exhausted = 0;
  for (int seed = 0; seed < 12; ++seed) {
    const Outcome o = call({"build-minor", tfp, "--mode", "advisory", "--lambda", "1/1000000", "--max-tries", "1",
                            "--seed", std::to_string(seed)});
    CHECK((o.code == kOk || o.code == kSamplerExhausted));
    exhausted += o.code == kSamplerExhausted;
  }
  CHECK(exhausted > 0);
}

TEST_CASE("gamma") {
  const Outcome o = call({"gamma"});
  CHECK(o.code == 0);
  CHECK(o.out == "z_star 0.193984\ngamma 0.986882\n");
  const Json j = Json::parse(call({"gamma", "--tolerance", "0.01", "--format", "records"}).out);
  CHECK(j["gamma"].get<double>() == doctest::Approx(0.986882).epsilon(1e-4));
}

TEST_CASE("mc suites") {
  for (const std::string suite : {"pairing-marginals", "pairing-joint", "chebyshev"}) {
    const Outcome o = call({"mc", suite, "--trials", "5000", "--seed", "3", "--format", "records"});
    CHECK_MESSAGE(o.code == 0, suite);
    std::istringstream lines(o.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      const Json j = Json::parse(line);
      CHECK(j["suite"] == suite);
      CHECK(j["pass"] == true);
      ++count;
    }
    CHECK(count >= 1);
    CHECK(call({"mc", suite, "--trials", "5000", "--seed", "3", "--format", "records"}).out == o.out);
  }
  CHECK(call({"mc", "no-such-suite"}).code == minorforge::cli::kInputError);
}

TEST_CASE("the installed executable forwards exit codes") {
  const std::string exe = MINORFORGE_EXE;
  CHECK(std::system((exe + " gamma > /dev/null").c_str()) == 0);
  const int status = std::system((exe + " analyze /nonexistent/graph 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == minorforge::cli::kInputError);
}
