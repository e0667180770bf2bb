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

// Command line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage or input error,
// 3 resource refusal (huge search without --allow-huge, depth limit reached).

#pragma once

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lnn/lnn.hpp"

namespace lnn::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kRefused = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline BitMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

inline Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open circuit file '" + path + "'");
  return read_circuit(in);
}

/// "3 1 2" or "3,1,2".
inline std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::string s = text;
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream is(s);
  std::vector<std::size_t> out;
  std::string tok;
  while (is >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 4) {
      throw UsageError(std::string("bad ") + what + " entry '" + tok + "'");
    }
    out.push_back(std::stoul(tok));
  }
  return out;
}

inline void print_metrics(std::ostream& err, const Circuit& c) {
  const Metrics m = metrics(c);
  err << "depth " << m.depth << "  size " << m.size << "  density " << std::fixed
      << std::setprecision(3) << m.density << std::defaultfloat << '\n';
}

inline void print_lower_bounds(std::ostream& err, const BitMatrix& target) {
  const BoundReport b = matrix_lower_bounds(target);
  err << "lower bounds (rank-cut): depth >= " << b.depth_lb << "  size >= " << b.size_lb << '\n';
}

}  // namespace detail

struct Options {
  // synth
  std::string op;
  std::size_t n = 0;
  std::string perm;
  std::string matrix_path;
  std::string positions;
  // verify / render / bounds / search
  std::string circuit_path;
  std::string target_path;
  bool kv = false;
  bool reversal = false;
  bool max = false;
  std::size_t depth_limit = 64;
  bool allow_huge = false;
  std::string witness_path;
  std::size_t threads = 1;
  bool maximal_slices = false;
};

inline int run_synth(const Options& o, std::ostream& out, std::ostream& err) {
  Circuit c;
  std::optional<BitMatrix> target;
  std::string bound;
  const std::size_t n = o.n;
  auto need_n = [&] {
    if (n < 2) throw UsageError("--op " + o.op + " needs --n N with N >= 2");
  };
  if (o.op == "add") {
    need_n();
    c = add_circuit(n);
    target = add_target(n);
    bound = "depth <= " + std::to_string(n % 2 ? n + 4 : n + 3) + ", size = " + std::to_string(4 * n - 7);
  } else if (o.op == "swap") {
    need_n();
    c = swap_circuit(n);
    target = swap_target(n);
    bound = "depth <= " + std::to_string(n % 2 ? n + 8 : n + 7) + ", size = " + std::to_string(6 * n - 9);
  } else if (o.op == "rotate") {
    need_n();
    c = rotate_circuit(n);
    target = rotate_target(n);
    bound = n == 2 ? "depth 3 (adjacent swap)" : "depth <= " + std::to_string(n + 5) + ", size = " + std::to_string(4 * n - 6);
  } else if (o.op == "reverse") {
    need_n();
    c = reverse_circuit(n);
    target = reverse_target(n);
    bound = "depth = " + std::to_string(n == 2 ? 3 : 2 * n + 2) + ", size = " + std::to_string(n * n - 1);
    if (n >= 3) {
      const auto [d, s] = reversal_bounds(n);
      bound += "; any reversal needs depth >= " + std::to_string(d) + ", size >= " + std::to_string(s);
    }
  } else if (o.op == "permute") {
    if (o.perm.empty()) throw UsageError("--op permute needs --perm");
    const auto sigma = detail::parse_list(o.perm, "permutation");
    if (n != 0 && sigma.size() != n) throw UsageError("--perm length does not match --n");
    c = permutation_circuit(sigma);
    target = permutation_matrix(sigma);
    bound = "depth <= " + std::to_string(3 * sigma.size()) + ", size = 3 * " +
            std::to_string(inversion_count(sigma)) + " inversions";
  } else if (o.op == "matrix") {
    if (o.matrix_path.empty()) throw UsageError("--op matrix needs --matrix FILE");
    const BitMatrix m = detail::load_matrix(o.matrix_path);
    if (n != 0 && m.size() != n) throw UsageError("--n does not match the matrix file");
    c = synthesize(m);
    target = m;
    bound = "depth <= " + std::to_string(5 * m.size());
  } else if (o.op == "gather") {
    need_n();
    if (o.positions.empty()) throw UsageError("--op gather needs --positions");
    const auto pos = detail::parse_list(o.positions, "position");
    GatherResult g = gather_circuit(n, pos);
    err << "window starts at wire " << g.window_start << '\n';
    bound = "depth <= " + std::to_string((n + 1) / 2 + kGatherDepthPerWire * pos.size());
    c = std::move(g.circuit);
  } else {
    throw UsageError("unknown --op '" + o.op + "'");
  }
  write_circuit(out, c);
  detail::print_metrics(err, c);
  err << "bound: " << bound << '\n';
  if (target) detail::print_lower_bounds(err, *target);
  return kOk;
}

inline int run_verify(const Options& o, std::ostream& out) {
  const Circuit c = detail::load_circuit(o.circuit_path);
  const BitMatrix target = detail::load_matrix(o.target_path);
  if (c.wires() != target.size()) throw UsageError("circuit and target have different wire counts");
  const bool pass = matrix_of(c) == target;
  out << (pass ? "PASS" : "FAIL") << '\n';
  const Metrics m = metrics(c);
  out << "depth " << m.depth << '\n' << "size " << m.size << '\n';
  if (is_invertible(target)) {
    const BoundReport b = matrix_lower_bounds(target);
    out << "lower bounds: depth >= " << b.depth_lb << "  size >= " << b.size_lb << '\n';
    out << "cut  gates  lower_bound\n";
    const auto counts = crossing_counts(c);
    for (const CutBound& cb : b.per_cut) {
      out << std::setw(3) << cb.k << "  " << std::setw(5) << counts[cb.k - 1] << "  " << std::setw(11)
          << cb.crossings << '\n';
    }
  } else {
    out << "target is singular; no circuit can compute it\n";
  }
  return pass ? kOk : kFail;
}

inline int run_bounds(const Options& o, std::ostream& out) {
  const BitMatrix target = detail::load_matrix(o.target_path);
  const BoundReport b = matrix_lower_bounds(target);
  const std::size_t n = target.size();
  const bool is_reversal = target == BitMatrix::anti_identity(n) && n >= 3;
  if (o.kv) {
    out << "n=" << n << '\n' << "method=" << to_string(b.method) << '\n'
        << "depth_lb=" << b.depth_lb << '\n' << "size_lb=" << b.size_lb << '\n';
    for (const CutBound& cb : b.per_cut) out << "cut." << cb.k << '=' << cb.crossings << '\n';
    if (is_reversal) {
      const auto [d, s] = reversal_bounds(n);
      out << "reversal.depth_lb=" << d << '\n' << "reversal.size_lb=" << s << '\n';
    }
    return kOk;
  }
  out << "n         " << n << '\n'
      << "method    " << to_string(b.method) << '\n'
      << "depth_lb  " << b.depth_lb << '\n'
      << "size_lb   " << b.size_lb << '\n'
      << "cut  lower_bound\n";
  for (const CutBound& cb : b.per_cut) {
    out << std::setw(3) << cb.k << "  " << std::setw(11) << cb.crossings << '\n';
  }
  if (is_reversal) {
    const auto [d, s] = reversal_bounds(n);
    out << "reversal closed form (" << to_string(BoundMethod::kReversalClosedForm) << "): depth_lb " << d
        << "  size_lb " << s << '\n';
  }
  return kOk;
}

inline int run_search(const Options& o, std::ostream& out, std::ostream& err) {
  const int modes = int(!o.target_path.empty()) + int(o.reversal) + int(o.max);
  if (modes != 1) throw UsageError("search needs exactly one of --target, --reversal, --max");
  if (o.max) {
    if (o.n == 0) throw UsageError("search --max needs --n");
    search::DiameterOptions opts{o.allow_huge, o.threads, o.maximal_slices};
    const auto r = search::max_depth(o.n, opts);
    out << "max_depth " << *r.depth << '\n' << "visited " << r.visited_count << '\n';
    if (r.farthest) {
      err << "a matrix at maximum depth:\n";
      write_matrix(err, *r.farthest);
    }
    return kOk;
  }
  BitMatrix target = o.reversal ? BitMatrix(2) : detail::load_matrix(o.target_path);
  if (o.reversal) {
    if (o.n == 0) throw UsageError("search --reversal needs --n");
    target = BitMatrix::anti_identity(o.n);
  } else if (o.n != 0 && o.n != target.size()) {
    throw UsageError("--n does not match the target file");
  }
  search::DistanceOptions opts{o.depth_limit, !o.witness_path.empty(), o.maximal_slices};
  const auto r = search::distance(target, opts);
  if (!r.depth) {
    out << "distance > " << o.depth_limit << '\n' << "visited " << r.visited_count << '\n';
    return kRefused;
  }
  out << "distance " << *r.depth << '\n' << "visited " << r.visited_count << '\n';
  if (r.witness) {
    std::ofstream w(o.witness_path);
    if (!w) throw UsageError("cannot write witness file '" + o.witness_path + "'");
    write_circuit(w, *r.witness);
  }
  return kOk;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesize, verify, bound and search CNOT circuits on a line of wires"};
  app.require_subcommand(1);
  Options o;

  auto* synth = app.add_subcommand("synth", "Build a circuit and print it in the circuit text format");
  synth->add_option("--op", o.op, "add|swap|rotate|reverse|permute|matrix|gather")
      ->required()
      ->check(CLI::IsMember({"add", "swap", "rotate", "reverse", "permute", "matrix", "gather"}));
  synth->add_option("--n", o.n, "Number of wires");
  synth->add_option("--perm", o.perm, "Permutation as space-separated images of 1..n");
  synth->add_option("--matrix", o.matrix_path, "Matrix file");
  synth->add_option("--positions", o.positions, "Wires to gather, increasing");

  auto* verify = app.add_subcommand("verify", "Simulate a circuit and compare against a target matrix");
  verify->add_option("--circuit", o.circuit_path, "Circuit file")->required();
  verify->add_option("--target", o.target_path, "Matrix file")->required();

  auto* render_cmd = app.add_subcommand("render", "Draw a circuit as ASCII art");
  render_cmd->add_option("--circuit", o.circuit_path, "Circuit file")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on depth and size for a target matrix");
  bounds_cmd->add_option("--target", o.target_path, "Matrix file")->required();
  bounds_cmd->add_flag("--kv", o.kv, "Print key=value lines instead of the table");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive minimum-depth search (n <= 8)");
  search_cmd->add_option("--n", o.n, "Number of wires");
  search_cmd->add_option("--target", o.target_path, "Matrix file");
  search_cmd->add_flag("--reversal", o.reversal, "Target the wire reversal");
  search_cmd->add_flag("--max", o.max, "Maximum depth over the whole group (n <= 5, n = 6 with --allow-huge)");
  search_cmd->add_option("--depth-limit", o.depth_limit, "Give up beyond this depth")->check(CLI::Range(0, 255));
  search_cmd->add_flag("--allow-huge", o.allow_huge, "Allow the 2^36-bit visited map needed for n = 6");
  search_cmd->add_option("--witness", o.witness_path, "Write a minimum-depth circuit to FILE");
  search_cmd->add_option("--threads", o.threads, "Worker threads for --max")->check(CLI::Range(1, 256));
  search_cmd->add_flag("--maximal-slices", o.maximal_slices, "Use only maximal time slices as generators (may overstate depth for n >= 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (synth->parsed()) return run_synth(o, out, err);
    if (verify->parsed()) return run_verify(o, out);
    if (render_cmd->parsed()) {
      out << render(detail::load_circuit(o.circuit_path));
      return kOk;
    }
    if (bounds_cmd->parsed()) return run_bounds(o, out);
    if (search_cmd->parsed()) return run_search(o, out, err);
  } catch (const search::ResourceRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lnn::cli
