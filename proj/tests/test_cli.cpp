// Copyright 2026 The radionum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end runs of the radionum binary.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "radionum/random_tree.hpp"
#include "radionum/tree.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RADIONUM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Workdir {
 public:
  Workdir() {
    dir_ = fs::temp_directory_path() / ("radionum_cli_" + std::to_string(getpid()));
    fs::create_directories(dir_);
  }
  ~Workdir() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kP3 = "3\n0 1\n1 2\n";
const char* kP4 = "4\n0 1\n1 2\n2 3\n";
const char* kK14 = "5\n0 1\n0 2\n0 3\n0 4\n";
const char* kK13 = "4\n0 1\n0 2\n0 3\n";

}  // namespace

TEST_CASE("cli analyze") {
  Workdir w;
  auto r = run("analyze " + w.write("p4.txt", kP4));
  CHECK(r.code == 0);
  CHECK(r.out.find("bound: 5\n") != std::string::npos);
  CHECK(r.out.find("centers: {1, 2}") != std::string::npos);

  r = run("analyze " + w.write("k14.txt", kK14));
  CHECK(r.code == 0);
  CHECK(r.out.find("centers: {0}") != std::string::npos);
  CHECK(r.out.find("epsilon: 1") != std::string::npos);

  r = run("analyze --format record " + w.path("p4.txt"));
  CHECK(r.code == 0);
  CHECK(r.out.find("p=4 d=3 ") == 0);
  CHECK(r.out.find(" bound=5\n") != std::string::npos);

  CHECK(run("analyze " + w.write("bad.txt", "4\n0 1\n1 x\n")).code == 2);
  CHECK(run("analyze " + w.write("cyc.txt", "3\n0 1\n1 2\n2 0\n")).code == 2);
  CHECK(run("analyze " + w.path("missing.txt")).code == 2);
  CHECK(run("analyze " + w.write("one.txt", "1\n")).code == 2);
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("cli label and verify") {
  Workdir w;
  const auto p4 = w.write("p4.txt", kP4);
  auto r = run("label " + p4 + " --out " + w.path("p4.lab"));
  CHECK(r.code == 0);
  CHECK(r.out == "optimal span 5\n");
  r = run("verify " + p4 + " " + w.path("p4.lab"));
  CHECK(r.code == 0);
  CHECK(r.out == "PASS span 5\n");

  // Stdout of label is itself a labeling file.
  r = run("label " + p4);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# optimal span 5\n", 0) == 0);
  CHECK(run("verify " + p4 + " " + w.write("stdout.lab", r.out)).code == 0);

  const auto strict = w.write("strict.txt", radionum::to_text(fixtures::bound_strict_tree()));
  r = run("label " + strict);
  CHECK(r.code == 1);
  CHECK(r.out.find("not attained") != std::string::npos);

  const auto huge = w.write("huge.txt", radionum::to_text(radionum::random_tree(3000, 7)));
  CHECK(run("label --budget 10 " + huge).code == 3);

  const auto p3 = w.write("p3.txt", kP3);
  r = run("verify " + p3 + " " + w.write("good.lab", "0 2\n1 0\n2 3\n"));
  CHECK(r.code == 0);
  CHECK(r.out == "PASS span 3\n");
  r = run("verify " + p3 + " " + w.write("close.lab", "0 0\n1 1\n2 2\n"));
  CHECK(r.code == 1);
  CHECK(r.out.rfind("FAIL pair (0,1)", 0) == 0);
  CHECK(run("verify " + p3 + " " + w.write("four.lab", "0 0\n1 1\n2 2\n3 3\n")).code == 2);
}

TEST_CASE("cli label output always verifies") {
  Workdir w;
  int certified = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto tree = radionum::random_tree(4 + static_cast<int>(seed % 9), seed);
    const auto tp = w.write("t.txt", radionum::to_text(tree));
    const auto r = run("label " + tp + " --out " + w.path("t.lab"));
    if (r.code != 0) {
      CHECK(r.code == 1);
      continue;
    }
    ++certified;
    CHECK(run("verify " + tp + " " + w.path("t.lab")).code == 0);
  }
  CHECK(certified > 0);
}

TEST_CASE("cli exact") {
  Workdir w;
  auto r = run("exact " + w.write("p4.txt", kP4));
  CHECK(r.code == 0);
  CHECK(r.out.find("rn: 5") != std::string::npos);
  r = run("exact " + w.write("k13.txt", kK13));
  CHECK(r.code == 0);
  CHECK(r.out.find("rn: 4") != std::string::npos);

  const auto big = w.write("t30.txt", radionum::to_text(radionum::random_tree(30, 3)));
  CHECK(run("exact " + big).code == 2);
  CHECK(run("exact --cap 40 --budget 5 " + big).code == 3);
}

TEST_CASE("cli compose round-trips through analyze") {
  Workdir w;
  const auto p3 = w.write("p3.txt", kP3);
  const auto k13 = w.write("k13.txt", kK13);

  struct Case {
    std::string args;
    int order;
  };
  const Case cases[] = {
      {"wk " + p3 + " " + p3, 5},
      {"wk " + p3 + " " + p3 + " " + p3, 7},
      {"wk " + p3 + " " + k13, 6},
      {"sk " + p3 + " --k 2", 1 + 2 * 3},
      {"sk " + k13 + " --k 3", 1 + 3 * 4},
      {"dk " + p3 + " --k 1", 2 + 2 * 3},
      {"dk " + k13 + " --k 2", 2 + 4 * 4},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    const auto out = w.path("c.txt");
    auto r = run("compose " + c.args + " --out " + out);
    REQUIRE(r.code == 0);
    CHECK(fs::exists(out + ".prov"));
    const auto prov = slurp(out + ".prov");
    CHECK(std::count(prov.begin(), prov.end(), '\n') == c.order);
    r = run("analyze --format record " + out);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("p=" + std::to_string(c.order) + " ", 0) == 0);
  }

  auto r = run("compose wk " + p3 + " " + p3);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("5\n", 0) == 0);
  CHECK(r.out.find("# ") != std::string::npos);
  CHECK(run("compose sk " + w.write("p4.txt", kP4) + " --k 2").code == 2);
  CHECK(run("compose xk " + p3).code == 2);
}

TEST_CASE("cli theorem-check") {
  Workdir w;
  const auto p3 = w.write("p3.txt", kP3);
  auto r = run("theorem-check wk " + p3 + " " + p3);
  CHECK(r.code == 0);
  CHECK(r.out.find("all_agree") != std::string::npos);

  r = run("theorem-check --format record sk " + p3 + " --k 2");
  CHECK(r.code == 1);
  CHECK(r.out.find("predicted=11") != std::string::npos);
  CHECK(r.out.find("exact=13") != std::string::npos);

  const auto p5 = w.write("p5.txt", "5\n0 1\n1 2\n2 3\n3 4\n");
  CHECK(run("theorem-check wk " + p5 + " " + p5).code == 1);
}

TEST_CASE("cli output is deterministic") {
  Workdir w;
  const auto a = run("generate --p 25 --seed 99");
  const auto b = run("generate --p 25 --seed 99");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run("generate --p 25 --seed 100").out);
  const auto t = w.write("g.txt", a.out);
  for (const std::string cmd : {"analyze ", "label ", "export-dot "}) {
    const auto x = run(cmd + t);
    const auto y = run(cmd + t);
    CHECK(x.code == y.code);
    CHECK(x.out == y.out);
  }
}
