#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "algser/cli.hpp"

using namespace algser;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "algser");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("algser-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

const char* kCatalan = "y^2 - y + x";

}  // namespace

TEST_CASE("solve") {
  Result r = run({"solve", "--poly", kCatalan, "-p", "2", "-N", "9"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == std::vector<std::string>{"0,1,1,0,1,0,0,0,1", "1,1,1,0,1,0,0,0,1", "roots = 2",
                                                 "complete = true"});
  r = run({"solve", "--poly", "y - x", "-p", "5", "-N", "3"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).front() == "0,1,0");
  CHECK(run({"solve", "--poly", "1", "-p", "2"}).code == kExitUsage);
  r = run({"solve", "--poly", "y^2 + x", "-p", "3", "-N", "4"});
  CHECK(r.code == kExitEmpty);
  CHECK(lines(r.out).front() == "roots = 0");
  CHECK(run({"solve", "--poly", kCatalan, "-p", "2", "-N", "9", "--prefix", "1"}).out.rfind("1,1,1", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"solve", "--poly", kCatalan}).code == kExitUsage);
  CHECK(run({"solve", "--poly", "y^2 +", "-p", "2"}).code == kExitUsage);
  CHECK(run({"solve", "--poly", kCatalan, "-p", "4"}).code == kExitUsage);
  CHECK(run({"solve", "--poly", kCatalan, "-p", "2", "--max-branches", "0"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("bounds") {
  Result r = run({"bounds", "--poly", kCatalan, "-p", "2"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == std::vector<std::string>{"h = 9", "corG = 9", "propH = 1"});
  r = run({"bounds", "--poly", "y^2 - x^2", "-p", "3"});
  CHECK(lines(r.out) == std::vector<std::string>{"h = 48", "corG = 48", "propH = 2"});
  r = run({"bounds", "--poly", "y - x", "-p", "3"});
  CHECK(lines(r.out).back() == "propH = n/a");
}

TEST_CASE("verify") {
  Result r = run({"verify", "--poly", kCatalan, "-p", "2", "--prefix", "0,1,1,0,1,0,0,0,1,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "ok\n");
  r = run({"verify", "--poly", kCatalan, "-p", "2", "--prefix", "0,1,0,0"});
  CHECK(r.code == kExitVerification);
  CHECK(r.out == "fail\n");
  CHECK(run({"verify", "--poly", kCatalan, "-p", "2", "--prefix", "0,x"}).code == kExitUsage);
}

TEST_CASE("compile, coeff and dfao") {
  const TempDir dir;
  const std::string c2 = dir.file("c2.json"), c3 = dir.file("c3.json");

  Result r = run({"compile", "--poly", kCatalan, "-p", "2", "--prefix", "0,1,1,0,1,0,0,0,1,0", "--out", c2});
  REQUIRE(r.code == kExitOk);
  const auto out2 = lines(r.out);
  CHECK(std::find(out2.begin(), out2.end(), "e = 12") != out2.end());
  CHECK(std::find(out2.begin(), out2.end(), "a = x") != out2.end());
  CHECK(std::find(out2.begin(), out2.end(), "h = 9") != out2.end());
  CHECK(nlohmann::json::parse(slurp(c2))["e"] == 12);

  r = run({"compile", "--poly", kCatalan, "-p", "3", "--prefix", "auto", "--out", c3});
  REQUIRE(r.code == kExitOk);
  const auto out3 = lines(r.out);
  CHECK(out3.front() == "h = 24");

  r = run({"coeff", "--in", c3, "--n", "6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0\n");
  r = run({"coeff", "--in", c3, "--range", "1..6"});
  CHECK(lines(r.out) == std::vector<std::string>{"1", "1", "2", "2", "2", "0"});
  std::string big = "1";
  big.append(500, '0');
  r = run({"coeff", "--in", c3, "--n", big});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0\n");
  CHECK(run({"coeff", "--in", c3, "--n", "12a"}).code == kExitUsage);
  CHECK(run({"coeff", "--in", c3, "--range", "6..1"}).code == kExitUsage);
  CHECK(run({"coeff", "--in", c3}).code == kExitUsage);
  CHECK(run({"coeff", "--in", dir.file("missing.json"), "--n", "1"}).code == kExitUsage);

  const std::string dfao = dir.file("d.json"), dot = dir.file("d.dot");
  r = run({"dfao", "--in", c2, "--out", dfao, "--dot", dot, "--minimize"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).size() == 2);
  CHECK(nlohmann::json::parse(slurp(dfao))["p"] == 2);
  CHECK(slurp(dot).rfind("digraph", 0) == 0);
  CHECK(run({"dfao", "--in", c3, "--max-states", "2"}).code == kExitCap);
}

TEST_CASE("compile exit codes") {
  CHECK(run({"compile", "--poly", kCatalan, "-p", "2", "--prefix", "0,1,0,0,0,0,0,0,0,0"}).code == kExitVerification);
  CHECK(run({"compile", "--poly", kCatalan, "-p", "2", "--prefix", "0,1,1"}).code == kExitUsage);
  CHECK(run({"compile", "--poly", kCatalan, "-p", "3", "--max-dim", "10"}).code == kExitCap);
  CHECK(run({"compile", "--poly", "y^2 + x", "-p", "3"}).code == kExitEmpty);
}

TEST_CASE("tampered artifacts are rejected") {
  const TempDir dir;
  const std::string path = dir.file("c2.json");
  REQUIRE(run({"compile", "--poly", kCatalan, "-p", "2", "--out", path}).code == kExitOk);
  nlohmann::json doc = nlohmann::json::parse(slurp(path));
  doc["A"][0].erase(0);
  std::ofstream(path) << doc.dump();
  const Result r = run({"coeff", "--in", path, "--n", "3"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("A[0]") != std::string::npos);
}
