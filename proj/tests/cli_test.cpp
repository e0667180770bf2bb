// Copyright 2026 The lnn-cnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "test_util.hpp"

using namespace lnn;
using namespace lnn::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lnn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lnn_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string read_file(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_F(CliTest, synth_reverse_nine) {
  const Outcome o = run_cli({"synth", "--op", "reverse", "--n", "9"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const Circuit c = circuit_from_string(o.out);
  EXPECT_EQ(c.depth(), 20u);
  EXPECT_EQ(c, reverse_circuit(9));
  EXPECT_NE(o.err.find("depth 20"), std::string::npos);
}

TEST_F(CliTest, synth_identity_permutation_is_empty) {
  const Outcome o = run_cli({"synth", "--op", "permute", "--n", "3", "--perm", "1 2 3"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_TRUE(circuit_from_string(o.out).empty());
}

// synth then verify for every op and every n in 2..32 (matrix op up to 16).
TEST_F(CliTest, synth_verify_round_trip) {
  std::mt19937_64 rng(kDefaultSeed);
  for (std::size_t n = 2; n <= 32; ++n) {
    std::vector<std::pair<std::vector<std::string>, BitMatrix>> jobs{
        {{"--op", "add"}, add_target(n)},
        {{"--op", "swap"}, swap_target(n)},
        {{"--op", "rotate"}, rotate_target(n)},
        {{"--op", "reverse"}, reverse_target(n)},
    };
    const auto sigma = random_permutation(n, rng);
    std::string perm;
    for (std::size_t v : sigma) perm += std::to_string(v) + " ";
    jobs.push_back({{"--op", "permute", "--perm", perm}, permutation_matrix(sigma)});
    if (n <= 16) {
      const BitMatrix m = random_invertible(n, rng);
      jobs.push_back({{"--op", "matrix", "--matrix", write("m.txt", matrix_to_string(m))}, m});
    }
    for (auto& [args, target] : jobs) {
      std::vector<std::string> full{"synth", "--n", std::to_string(n)};
      full.insert(full.end(), args.begin(), args.end());
      const Outcome s = run_cli(full);
      ASSERT_EQ(s.code, cli::kOk) << s.err;
      const std::string cpath = write("c.txt", s.out);
      const std::string tpath = write("t.txt", matrix_to_string(target));
      const Outcome v = run_cli({"verify", "--circuit", cpath, "--target", tpath});
      EXPECT_EQ(v.code, cli::kOk) << args[1] << " n=" << n << "\n" << v.out;
      EXPECT_EQ(v.out.substr(0, 4), "PASS");
      // the file written by synth reads back to the same circuit
      EXPECT_EQ(circuit_to_string(circuit_from_string(read_file(cpath))), s.out);
    }
  }
}

TEST_F(CliTest, synth_matrix_depth_within_five_n) {
  std::mt19937_64 rng(kDefaultSeed + 1);
  const BitMatrix m = random_invertible(6, rng);
  const Outcome s = run_cli({"synth", "--op", "matrix", "--matrix", write("m6.txt", matrix_to_string(m))});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  EXPECT_LE(circuit_from_string(s.out).depth(), 30u);
}

TEST_F(CliTest, synth_gather_reports_window) {
  const Outcome o = run_cli({"synth", "--op", "gather", "--n", "9", "--positions", "1,9"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_NE(o.err.find("window starts at wire 5"), std::string::npos);
  const BitMatrix m = matrix_of(circuit_from_string(o.out));
  EXPECT_EQ(m.column(5), BitVector::unit(9, 1));
  EXPECT_EQ(m.column(6), BitVector::unit(9, 9));
}

TEST_F(CliTest, verify_failures) {
  const std::string rev = write("r.txt", circuit_to_string(reverse_circuit(5)));
  const std::string j = write("j.txt", matrix_to_string(BitMatrix::anti_identity(5)));
  const std::string id = write("i.txt", matrix_to_string(BitMatrix::identity(5)));
  EXPECT_EQ(run_cli({"verify", "--circuit", rev, "--target", j}).code, cli::kOk);
  const Outcome fail = run_cli({"verify", "--circuit", rev, "--target", id});
  EXPECT_EQ(fail.code, cli::kFail);
  EXPECT_EQ(fail.out.substr(0, 4), "FAIL");

  // drop one gate from each position in turn
  const Circuit c = add_circuit(7);
  const std::string target = write("a.txt", matrix_to_string(add_target(7)));
  const GateList gates = c.gates();
  for (std::size_t drop = 0; drop < gates.size(); ++drop) {
    GateList tampered = gates;
    tampered.erase(tampered.begin() + static_cast<std::ptrdiff_t>(drop));
    const std::string cp = write("t.txt", circuit_to_string(schedule(7, tampered)));
    EXPECT_EQ(run_cli({"verify", "--circuit", cp, "--target", target}).code, cli::kFail) << drop;
  }
}

TEST_F(CliTest, render_examples) {
  Outcome o = run_cli({"render", "--circuit", write("e.txt", "n 3\n")});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_EQ(o.out, "1 -\n2 -\n3 -\n");
  o = run_cli({"render", "--circuit", write("u.txt", "n 2\nu1\n")});
  EXPECT_EQ(o.out, "1 -+-\n2 -^-\n");
  o = run_cli({"render", "--circuit", write("a.txt", circuit_to_string(add_circuit(10)))});
  ASSERT_EQ(o.code, cli::kOk);
  const std::string first = o.out.substr(0, o.out.find('\n'));
  EXPECT_EQ((first.size() - 4) / 2, 13u);
  EXPECT_EQ(parse_diagram(o.out), add_circuit(10));
}

TEST_F(CliTest, bounds_reversal_nine) {
  const std::string j = write("j9.txt", matrix_to_string(BitMatrix::anti_identity(9)));
  Outcome o = run_cli({"bounds", "--target", j, "--kv"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_NE(o.out.find("depth_lb=16\n"), std::string::npos);
  EXPECT_NE(o.out.find("size_lb=40\n"), std::string::npos);
  EXPECT_NE(o.out.find("cut.4=8\n"), std::string::npos);
  EXPECT_NE(o.out.find("reversal.depth_lb=19\n"), std::string::npos);
  EXPECT_NE(o.out.find("reversal.size_lb=49\n"), std::string::npos);
  o = run_cli({"bounds", "--target", j});
  ASSERT_EQ(o.code, cli::kOk);
  EXPECT_NE(o.out.find("depth_lb  16"), std::string::npos);
  EXPECT_NE(o.out.find("19"), std::string::npos);
}

TEST_F(CliTest, search_modes) {
  Outcome o = run_cli({"search", "--n", "4", "--max"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "max_depth 10");

  const std::string witness = path("w.txt");
  o = run_cli({"search", "--n", "5", "--reversal", "--witness", witness});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "distance 12");
  const Circuit w = circuit_from_string(read_file(witness));
  EXPECT_EQ(w.depth(), 12u);
  EXPECT_EQ(matrix_of(w), BitMatrix::anti_identity(5));

  const std::string t = write("t.txt", matrix_to_string(add_target(4)));
  o = run_cli({"search", "--target", t});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  o = run_cli({"search", "--n", "5", "--reversal", "--depth-limit", "4"});
  EXPECT_EQ(o.code, cli::kRefused);
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "distance > 4");
}

TEST_F(CliTest, exit_codes) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"synth", "--op", "twist", "--n", "4"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"synth", "--op", "add"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"synth", "--op", "permute", "--perm", "1 1 2"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "--circuit", path("missing.txt"), "--target", path("missing.txt")}).code,
            cli::kUsage);
  EXPECT_EQ(run_cli({"render", "--circuit", write("bad.txt", "n 3\nu1 d2\n")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"search", "--n", "4"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"search", "--n", "4", "--max", "--reversal"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"search", "--n", "9", "--reversal"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"bounds", "--target", write("z.txt", "2\n00\n00\n")}).code, cli::kUsage);
  const Outcome refused = run_cli({"search", "--n", "6", "--max"});
  EXPECT_EQ(refused.code, cli::kRefused);
  EXPECT_NE(refused.err.find("allow_huge"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
  EXPECT_EQ(run_cli({"synth", "--help"}).code, cli::kOk);
}
