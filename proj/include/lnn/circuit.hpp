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

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnn/f2.hpp"

namespace lnn {

/// CNOT between adjacent wires: bit[target] ^= bit[source], wires 1-based.
struct Gate {
  std::size_t target = 0;
  std::size_t source = 0;

  /// bit[i] ^= bit[i+1]
  static constexpr Gate up(std::size_t i) { return {i, i + 1}; }
  /// bit[i+1] ^= bit[i]
  static constexpr Gate down(std::size_t i) { return {i + 1, i}; }

  constexpr std::size_t upper() const { return std::min(target, source); }
  constexpr std::size_t lower() const { return std::max(target, source); }
  constexpr bool is_up() const { return target < source; }
  constexpr bool is_adjacent() const {
    return target + 1 == source || source + 1 == target;
  }
  constexpr bool touches(std::size_t wire) const { return wire == target || wire == source; }

  friend constexpr bool operator==(const Gate&, const Gate&) = default;
  friend constexpr auto operator<=>(const Gate& a, const Gate& b) {
    if (a.upper() != b.upper()) return a.upper() <=> b.upper();
    return a.target <=> b.target;
  }
};

/// "u<i>" or "d<i>", the token used by the circuit text format.
inline std::string to_string(const Gate& g) {
  return (g.is_up() ? "u" : "d") + std::to_string(g.upper());
}

using GateList = std::vector<Gate>;

/// Gates executed in one time step; no wire may be used twice.
using TimeSlice = std::vector<Gate>;

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n, std::vector<TimeSlice> slices = {})
      : n_(n), slices_(std::move(slices)) {
    if (n < 2 || n > kMaxDim) {
      throw std::invalid_argument("circuit wire count must be in [2, 64]");
    }
    std::erase_if(slices_, [](const TimeSlice& s) { return s.empty(); });
    for (auto& s : slices_) std::sort(s.begin(), s.end());
  }

  std::size_t wires() const { return n_; }
  const std::vector<TimeSlice>& slices() const { return slices_; }

  /// Number of (nonempty) time slices.
  std::size_t depth() const { return slices_.size(); }
  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& slice : slices_) s += slice.size();
    return s;
  }
  bool empty() const { return slices_.empty(); }

  /// Gates in execution order.
  GateList gates() const {
    GateList out;
    out.reserve(size());
    for (const auto& slice : slices_) out.insert(out.end(), slice.begin(), slice.end());
    return out;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_ = 2;
  std::vector<TimeSlice> slices_;
};

inline void check_gate(std::size_t n, const Gate& g) {
  if (!g.is_adjacent() || g.upper() < 1 || g.lower() > n) {
    throw std::invalid_argument("invalid gate " + std::to_string(g.target) + "<-" +
                                std::to_string(g.source) + " on " + std::to_string(n) +
                                " wires");
  }
}

/// Greedy list scheduling: every gate lands in the earliest slice after all
/// earlier-listed gates that share a wire with it. Wire-sharing gates keep
/// their relative order, so the result computes the same matrix as the list.
inline Circuit schedule(std::size_t n, std::span<const Gate> gates) {
  std::vector<std::size_t> next_free(n + 1, 0);
  std::vector<TimeSlice> slices;
  for (const Gate& g : gates) {
    check_gate(n, g);
    const std::size_t t = std::max(next_free[g.target], next_free[g.source]);
    if (t == slices.size()) slices.emplace_back();
    slices[t].push_back(g);
    next_free[g.target] = next_free[g.source] = t + 1;
  }
  return Circuit(n, std::move(slices));
}

/// C1 then C2: slice lists concatenated. matrix_of(then(a, b)) = matrix_of(a) * matrix_of(b).
inline Circuit then(const Circuit& first, const Circuit& second) {
  if (first.wires() != second.wires()) throw std::invalid_argument("then: wire count mismatch");
  std::vector<TimeSlice> slices = first.slices();
  slices.insert(slices.end(), second.slices().begin(), second.slices().end());
  return Circuit(first.wires(), std::move(slices));
}

/// Runs the circuit on state m; circuits act on the right (column operations).
inline BitMatrix apply(const Circuit& c, BitMatrix m) {
  if (c.wires() != m.size()) throw std::invalid_argument("apply: dimension mismatch");
  for (const auto& slice : c.slices()) {
    for (const Gate& g : slice) m.add_column(g.target, g.source);
  }
  return m;
}

inline BitMatrix apply_gates(std::span<const Gate> gates, BitMatrix m) {
  for (const Gate& g : gates) {
    check_gate(m.size(), g);
    m.add_column(g.target, g.source);
  }
  return m;
}

inline BitMatrix matrix_of(const Circuit& c) { return apply(c, BitMatrix::identity(c.wires())); }

/// Slices in reverse order. Every CNOT is its own inverse.
inline Circuit inverse(const Circuit& c) {
  std::vector<TimeSlice> slices(c.slices().rbegin(), c.slices().rend());
  return Circuit(c.wires(), std::move(slices));
}

/// Mirror image: wire i becomes wire n+1-i. matrix_of(flip(C)) = J * matrix_of(C) * J
/// with J the anti-identity.
inline Circuit flip(const Circuit& c) {
  const std::size_t n = c.wires();
  std::vector<TimeSlice> slices;
  slices.reserve(c.depth());
  for (const auto& slice : c.slices()) {
    TimeSlice s;
    for (const Gate& g : slice) s.push_back({n + 1 - g.target, n + 1 - g.source});
    slices.push_back(std::move(s));
  }
  return Circuit(n, std::move(slices));
}

struct Metrics {
  std::size_t depth = 0;
  std::size_t size = 0;
  /// size / (depth * floor(n/2)); 0 for the empty circuit.
  double density = 0.0;
};

inline Metrics metrics(const Circuit& c) {
  Metrics m{c.depth(), c.size(), 0.0};
  if (m.depth > 0) {
    m.density = static_cast<double>(m.size) / static_cast<double>(m.depth * (c.wires() / 2));
  }
  return m;
}

/// Number of gates acting across each cut; entry k-1 counts gates on wires (k, k+1).
inline std::vector<std::size_t> crossing_counts(const Circuit& c) {
  std::vector<std::size_t> counts(c.wires() - 1, 0);
  for (const auto& slice : c.slices()) {
    for (const Gate& g : slice) ++counts[g.upper() - 1];
  }
  return counts;
}

struct Violation {
  enum class Kind { kNotAdjacent, kOutOfRange, kWireReused };
  Kind kind;
  std::size_t slice;  // 0-based slice index
  Gate gate;
};

inline std::string describe(const Violation& v) {
  const char* what = v.kind == Violation::Kind::kNotAdjacent   ? "gate not adjacent"
                     : v.kind == Violation::Kind::kOutOfRange ? "wire out of range"
                                                               : "wire used twice in slice";
  return std::string(what) + " at slice " + std::to_string(v.slice + 1) + ": " +
         std::to_string(v.gate.target) + "<-" + std::to_string(v.gate.source);
}

/// Adjacency, wire range and per-slice wire disjointness. Empty result means valid.
inline std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  const std::size_t n = c.wires();
  for (std::size_t s = 0; s < c.slices().size(); ++s) {
    std::vector<bool> used(n + 2, false);
    for (const Gate& g : c.slices()[s]) {
      if (g.target < 1 || g.source < 1 || g.target > n || g.source > n) {
        out.push_back({Violation::Kind::kOutOfRange, s, g});
        continue;
      }
      if (!g.is_adjacent()) {
        out.push_back({Violation::Kind::kNotAdjacent, s, g});
        continue;
      }
      if (used[g.target] || used[g.source]) {
        out.push_back({Violation::Kind::kWireReused, s, g});
      }
      used[g.target] = used[g.source] = true;
    }
  }
  return out;
}

}  // namespace lnn
