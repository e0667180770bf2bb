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

// Exact minimum depth by breadth-first search in the Cayley graph of GL_n(2)
// whose generators are the legal time slices. Every slice is an involution,
// so the graph is undirected and bidirectional search is sound.
//
// States are packed row-major into one word: entry (i, j) is bit (i-1)*n + (j-1).
// A gate on columns t <- s is then a masked shift of the whole word.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/f2.hpp"

namespace lnn::search {

inline constexpr std::size_t kMaxSearchWires = 8;
/// Largest n whose full visited bitmap is allocated without an explicit opt-in.
inline constexpr std::size_t kMaxDefaultDiameterWires = 5;
inline constexpr std::size_t kMaxDiameterWires = 6;

/// Thrown when a request would need more memory than allowed without opt-in.
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PackedMatrix = std::uint64_t;

inline void check_search_wires(std::size_t n) {
  if (n < 2 || n > kMaxSearchWires) {
    throw std::invalid_argument("search: wire count must be in [2, 8], got " + std::to_string(n));
  }
}

inline PackedMatrix pack(const BitMatrix& m) {
  const std::size_t n = m.size();
  check_search_wires(n);
  PackedMatrix x = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (m.get(i, j)) x |= PackedMatrix{1} << ((i - 1) * n + (j - 1));
    }
  }
  return x;
}

inline BitMatrix unpack(PackedMatrix x, std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) m.set(i, j, (x >> ((i - 1) * n + (j - 1))) & 1U);
  }
  return m;
}

/// A time slice compiled to shift masks over the packed encoding.
struct SliceMove {
  TimeSlice slice;
  PackedMatrix down_sources = 0;  // column i bits for every gate bit[i+1] ^= bit[i]
  PackedMatrix up_sources = 0;    // column i+1 bits for every gate bit[i] ^= bit[i+1]

  PackedMatrix operator()(PackedMatrix x) const {
    return x ^ ((x & down_sources) << 1) ^ ((x & up_sources) >> 1);
  }
};

inline SliceMove compile(std::size_t n, const TimeSlice& slice) {
  SliceMove mv{slice, 0, 0};
  for (const Gate& g : slice) {
    PackedMatrix column = 0;
    for (std::size_t i = 0; i < n; ++i) column |= PackedMatrix{1} << (i * n + (g.source - 1));
    (g.is_up() ? mv.up_sources : mv.down_sources) |= column;
  }
  return mv;
}

/// All nonempty sets of wire-disjoint adjacent gates, either direction each.
/// With maximal_only, only slices to which no further gate can be added; that
/// smaller set can overstate minimum depth from n = 4 on.
inline std::vector<TimeSlice> slice_generators(std::size_t n, bool maximal_only = false) {
  check_search_wires(n);
  std::vector<TimeSlice> out;
  TimeSlice current;
  // slot p means a gate on wires (p, p+1)
  auto recurse = [&](auto&& self, std::size_t p) -> void {
    if (p >= n) {
      if (current.empty()) return;
      if (maximal_only) {
        std::vector<bool> used(n + 2, false);
        for (const Gate& g : current) used[g.target] = used[g.source] = true;
        for (std::size_t q = 1; q < n; ++q) {
          if (!used[q] && !used[q + 1]) return;
        }
      }
      out.push_back(current);
      return;
    }
    self(self, p + 1);
    for (const Gate g : {Gate::up(p), Gate::down(p)}) {
      current.push_back(g);
      self(self, p + 2);
      current.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

inline std::vector<SliceMove> compile_all(std::size_t n, const std::vector<TimeSlice>& slices) {
  std::vector<SliceMove> moves;
  moves.reserve(slices.size());
  for (const auto& s : slices) moves.push_back(compile(n, s));
  return moves;
}

enum class SearchMode { kDistance, kDiameter };

struct SearchResult {
  std::size_t n = 0;
  SearchMode mode = SearchMode::kDistance;
  /// Minimum depth for kDistance, eccentricity of I for kDiameter. Unset when
  /// the depth limit was reached first.
  std::optional<std::size_t> depth;
  std::size_t depth_limit = 0;
  std::optional<Circuit> witness;
  /// One matrix at maximum depth (kDiameter; the smallest packed encoding).
  std::optional<BitMatrix> farthest;
  std::size_t visited_count = 0;
};

struct DistanceOptions {
  std::size_t depth_limit = 64;
  bool want_witness = false;
  bool maximal_slices_only = false;
};

namespace detail {

using DepthMap = std::unordered_map<PackedMatrix, std::uint8_t>;

/// Slices leading from `at` back to the root of `map`, in the order they are
/// applied when walking away from `at`.
inline std::vector<TimeSlice> walk_to_root(PackedMatrix at, const DepthMap& map,
                                           const std::vector<SliceMove>& moves) {
  std::vector<TimeSlice> path;
  std::uint8_t d = map.at(at);
  while (d > 0) {
    for (const SliceMove& mv : moves) {
      const PackedMatrix prev = mv(at);
      auto it = map.find(prev);
      if (it != map.end() && it->second + 1 == d) {
        path.push_back(mv.slice);
        at = prev;
        --d;
        break;
      }
    }
  }
  return path;
}

}  // namespace detail

/// Minimum depth of a circuit computing `target`, via bidirectional BFS
/// between I and the target. Balls around both ends grow one level at a time
/// (smaller frontier first); the first state seen from both sides fixes the
/// distance.
inline SearchResult distance(const BitMatrix& target, const DistanceOptions& options = {}) {
  const std::size_t n = target.size();
  check_search_wires(n);
  if (!is_invertible(target)) throw SingularMatrixError("search: target is singular");
  if (options.depth_limit > 255) throw std::invalid_argument("search: depth limit must be at most 255");
  const auto moves = compile_all(n, slice_generators(n, options.maximal_slices_only));

  SearchResult result;
  result.n = n;
  result.mode = SearchMode::kDistance;
  result.depth_limit = options.depth_limit;

  const PackedMatrix start = pack(BitMatrix::identity(n));
  const PackedMatrix goal = pack(target);
  detail::DepthMap from_start{{start, 0}}, from_goal{{goal, 0}};
  std::vector<PackedMatrix> front_start{start}, front_goal{goal};
  std::size_t radius_start = 0, radius_goal = 0;

  std::optional<PackedMatrix> meet;
  if (start == goal) meet = start;
  while (!meet && radius_start + radius_goal < options.depth_limit) {
    const bool grow_start = front_start.size() <= front_goal.size();
    auto& front = grow_start ? front_start : front_goal;
    auto& mine = grow_start ? from_start : from_goal;
    const auto& other = grow_start ? from_goal : from_start;
    auto& radius = grow_start ? radius_start : radius_goal;
    std::vector<PackedMatrix> next;
    for (PackedMatrix x : front) {
      for (const SliceMove& mv : moves) {
        const PackedMatrix y = mv(x);
        if (!mine.emplace(y, static_cast<std::uint8_t>(radius + 1)).second) continue;
        if (other.contains(y)) {
          meet = y;
          break;
        }
        next.push_back(y);
      }
      if (meet) break;
    }
    ++radius;
    if (!meet && next.empty()) break;  // component exhausted
    front = std::move(next);
  }
  result.visited_count = from_start.size() + from_goal.size();
  if (!meet) return result;

  result.depth = static_cast<std::size_t>(from_start.at(*meet)) + from_goal.at(*meet);
  if (options.want_witness) {
    auto first = detail::walk_to_root(*meet, from_start, moves);
    std::reverse(first.begin(), first.end());
    auto second = detail::walk_to_root(*meet, from_goal, moves);
    first.insert(first.end(), second.begin(), second.end());
    result.witness = Circuit(n, std::move(first));
  }
  return result;
}

struct DiameterOptions {
  bool allow_huge = false;
  std::size_t threads = 1;
  bool maximal_slices_only = false;
};

/// Order of GL_n(2): prod_{i<n} (2^n - 2^i).
inline std::uint64_t group_order(std::size_t n) {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  return order;
}

/// Maximum over GL_n(2) of the minimum circuit depth: full level-synchronous
/// BFS from I over a 2^(n^2)-bit visited map. Frontier expansion may be split
/// across threads; visited updates are atomic and idempotent, so every level
/// (and hence the result) is the same for any thread count.
inline SearchResult max_depth(std::size_t n, const DiameterOptions& options = {}) {
  check_search_wires(n);
  if (n > kMaxDiameterWires) throw std::invalid_argument("max_depth: supported only for n <= 6");
  if (n > kMaxDefaultDiameterWires && !options.allow_huge) {
    throw ResourceRefusal("max_depth: n = " + std::to_string(n) +
                          " needs a 2^" + std::to_string(n * n) +
                          "-bit visited map; pass allow_huge to run it");
  }
  const auto moves = compile_all(n, slice_generators(n, options.maximal_slices_only));
  const std::size_t bits = std::size_t{1} << (n * n);
  std::vector<std::uint64_t> visited((bits + 63) / 64, 0);

  auto test_and_set = [&](PackedMatrix x) {
    std::atomic_ref<std::uint64_t> word(visited[x >> 6]);
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    return (word.fetch_or(bit, std::memory_order_relaxed) & bit) != 0;
  };

  const PackedMatrix start = pack(BitMatrix::identity(n));
  test_and_set(start);
  std::vector<PackedMatrix> frontier{start};
  std::size_t visited_count = 1;
  std::size_t level = 0;
  const std::size_t workers = std::max<std::size_t>(1, options.threads);

  while (true) {
    std::vector<std::vector<PackedMatrix>> found(workers);
    auto expand = [&](std::size_t w) {
      const std::size_t lo = frontier.size() * w / workers;
      const std::size_t hi = frontier.size() * (w + 1) / workers;
      for (std::size_t idx = lo; idx < hi; ++idx) {
        for (const SliceMove& mv : moves) {
          const PackedMatrix y = mv(frontier[idx]);
          if (!test_and_set(y)) found[w].push_back(y);
        }
      }
    };
    if (workers == 1) {
      expand(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(expand, w);
      for (auto& t : pool) t.join();
    }
    std::vector<PackedMatrix> next;
    for (auto& f : found) next.insert(next.end(), f.begin(), f.end());
    if (next.empty()) break;
    visited_count += next.size();
    frontier = std::move(next);
    ++level;
  }

  SearchResult result;
  result.n = n;
  result.mode = SearchMode::kDiameter;
  result.depth = level;
  result.visited_count = visited_count;
  result.farthest = unpack(*std::min_element(frontier.begin(), frontier.end()), n);
  return result;
}

}  // namespace lnn::search
