#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("firefighter_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome run(const std::string& args) {
  const auto out_file = scratch_dir() / "stdout.txt";
  const std::string cmd = std::string(FIREFIGHTER_CLI) + " " + args + " > " + out_file.string() +
                          " 2> " + (scratch_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  Outcome o;
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  o.out = ss.str();
  return o;
}

fs::path write_spec(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("cli: hex simulate") {
  const auto r = run("hex simulate --tau-star 1");
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("contained").get<bool>());
  CHECK(doc.at("protected_count").get<int>() == 57);
  CHECK(doc.at("schema").get<int>() == 1);
  CHECK(r.out == run("hex simulate --tau-star 1").out);

  CHECK(run("hex simulate --tau-star 0").code == 2);
  CHECK(run("hex simulate").code == 2);
  CHECK(run("hex simulate --tau-star 1 --render png").code == 2);
  CHECK(run("hex simulate --tau-star 1 --window 0:1:0:1").code == 2);
}

TEST_CASE("cli: frames and trace") {
  const auto frames = scratch_dir() / "frames";
  const auto trace = scratch_dir() / "trace.jsonl";
  fs::remove_all(frames);
  const auto r = run("hex simulate --tau-star 4 --render svg --window -80:10:-40:40 --frames-dir " +
                     frames.string() + " --trace " + trace.string());
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("tau").get<int>() == 5);
  const auto final_turn = doc.at("final_turn").get<std::size_t>();
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(frames)) {
    files += e.path().extension() == ".svg" ? 1 : 0;
  }
  CHECK(files == final_turn);
  CHECK(doc.at("frames").get<std::size_t>() == final_turn);

  std::ifstream in(trace);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
  }
  CHECK(lines == final_turn);

  const auto bad_dir = run("hex simulate --tau-star 1 --render ascii --frames-dir /proc/none/frames");
  CHECK(bad_dir.code == 2);
}

TEST_CASE("cli: hex verify") {
  const auto r = run("hex verify --tau-max 9");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run("hex verify --tau-max 1").code == 0);
  CHECK(run("hex verify --tau-max 0").code == 2);
}

TEST_CASE("cli: tree check") {
  auto r = run("tree check --birth 2 --tail 2 --k 2");
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc.at("verdict") == "containable");
  CHECK(doc.at("depth") == 1);

  r = run("tree check --birth 2 --tail 2 --k 1 --horizon 100");
  CHECK(r.code == 1);
  CHECK(json::parse(r.out).at("verdict") == "provably-not-containable");

  r = run("tree check --birth 3,1 --tail 1 --k 1");
  CHECK(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc.at("verdict") == "containable");
  CHECK(doc.at("depth") == 3);

  CHECK(run("tree check --birth 2,x --k 1").code == 2);
  CHECK(run("tree check --birth 0 --k 1").code == 2);
  CHECK(run("tree check --k 1").code == 2);
}

TEST_CASE("cli: forest solve") {
  const auto paths = write_spec("paths.json", R"({"m":2,"n":2,"k":1,"d":[[1,1],[1,1]]})");
  auto r = run("forest solve " + paths.string() + " --witness");
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc.at("savable").get<bool>());
  CHECK(doc.at("witness").dump() == "[[1,0],[0,1]]");
  CHECK(r.out == run("forest solve " + paths.string() + " --witness").out);

  const auto binary = write_spec("binary.json", R"({"m":2,"n":2,"k":1,"d":[[2,2],[2,2]]})");
  r = run("forest solve " + binary.string());
  CHECK(r.code == 1);
  CHECK_FALSE(json::parse(r.out).at("savable").get<bool>());
  r = run("forest solve --no-prune " + binary.string());
  CHECK(r.code == 1);
  CHECK_FALSE(json::parse(r.out).at("pruned").get<bool>());

  const auto five = write_spec("five.json", R"({"m":5,"n":2,"k":2,"d":[[1,1,1,1,1],[1,1,1,1,1]]})");
  r = run("forest solve " + five.string());
  doc = json::parse(r.out);
  CHECK(doc.at("early_reject").get<bool>());
  CHECK_FALSE(doc.at("savable").get<bool>());

  CHECK(run("forest solve " + (scratch_dir() / "missing.json").string()).code == 2);
  const auto broken = write_spec("broken.json", R"({"m":2,"n":2)");
  CHECK(run("forest solve " + broken.string()).code == 2);
  const auto shape = write_spec("shape.json", R"({"m":2,"n":2,"k":1,"d":[[1,1]]})");
  CHECK(run("forest solve " + shape.string()).code == 2);
}

TEST_CASE("cli: usage") {
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("hex").code == 2);
  CHECK(run("bogus").code == 2);
}
