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

#include "lnn/bounds.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "test_util.hpp"

using namespace lnn;
using namespace lnn::testing;

namespace {

// Exact minimum, over all circuits computing each matrix, of the number of
// gates whose wires satisfy `counted`; 0-1 BFS over single gates.
template <typename Pred>
std::map<Dense, std::size_t> min_counted_gates(std::size_t n, Pred counted) {
  std::vector<Gate> gates;
  for (std::size_t i = 1; i < n; ++i) {
    gates.push_back(Gate::up(i));
    gates.push_back(Gate::down(i));
  }
  std::map<Dense, std::size_t> dist;
  std::deque<Dense> queue{dense_identity(n)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    const Dense x = queue.front();
    queue.pop_front();
    const std::size_t d = dist[x];
    for (const Gate& g : gates) {
      const Dense y = dense_run(x, {g});
      const std::size_t cost = counted(g) ? 1 : 0;
      auto it = dist.find(y);
      if (it == dist.end() || it->second > d + cost) {
        dist[y] = d + cost;
        if (cost == 0) queue.push_front(y);
        else queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

TEST(cut_lower_bound, examples) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      EXPECT_EQ(cut_lower_bound(BitMatrix::identity(n), k), 0u);
      if (2 * k <= n) {
        EXPECT_EQ(cut_lower_bound(BitMatrix::anti_identity(n), k), 2 * k);
      }
    }
  }
}

TEST(reversal_bounds, formulas) {
  EXPECT_EQ(reversal_cut_bound(9, 4), 9u);
  EXPECT_EQ(reversal_cut_bound(2, 1), 3u);
  EXPECT_THROW(reversal_cut_bound(9, 5), std::out_of_range);
  EXPECT_EQ(reversal_bounds(9), (std::pair<std::size_t, std::size_t>{19, 49}));
  EXPECT_EQ(reversal_bounds(10), (std::pair<std::size_t, std::size_t>{21, 60}));
  EXPECT_THROW(reversal_bounds(2), std::invalid_argument);
}

TEST(matrix_lower_bounds, examples) {
  const BoundReport id = matrix_lower_bounds(BitMatrix::identity(6));
  EXPECT_EQ(id.depth_lb, 0u);
  EXPECT_EQ(id.size_lb, 0u);
  const BoundReport j8 = matrix_lower_bounds(BitMatrix::anti_identity(8));
  EXPECT_EQ(j8.size_lb, 32u);
  EXPECT_EQ(j8.depth_lb, 14u);
  EXPECT_EQ(j8.method, BoundMethod::kRankCut);
  ASSERT_EQ(j8.per_cut.size(), 7u);
  EXPECT_EQ(j8.per_cut[3].crossings, 8u);
  EXPECT_GE(matrix_lower_bounds(BitMatrix::anti_identity(9)).depth_lb, 14u);
  EXPECT_THROW(matrix_lower_bounds(BitMatrix::zero(3)), SingularMatrixError);
}

// The per-cut bound never exceeds the true minimum crossing count.
TEST(cut_lower_bound, sound_against_exact_minimum) {
  for (std::size_t n : {2, 3, 4}) {
    for (std::size_t k = 1; k < n; ++k) {
      const auto exact = min_counted_gates(n, [k](const Gate& g) { return g.upper() == k; });
      EXPECT_EQ(exact.size(), search::group_order(n));
      std::size_t tight = 0;
      for (const auto& [m, best] : exact) {
        const std::size_t lb = cut_lower_bound(from_dense(m), k);
        EXPECT_LE(lb, best);
        tight += lb == best;
      }
      EXPECT_GT(tight, 0u);
    }
  }
}

TEST(matrix_lower_bounds, size_bound_sound_against_exact_minimum) {
  for (std::size_t n : {3, 4}) {
    const auto exact = min_counted_gates(n, [](const Gate&) { return true; });
    for (const auto& [m, best] : exact) EXPECT_LE(matrix_lower_bounds(from_dense(m)).size_lb, best);
  }
}

TEST(matrix_lower_bounds, sound_for_constructions) {
  std::mt19937_64 rng(kDefaultSeed);
  for (std::size_t n = 2; n <= 32; ++n) {
    std::vector<std::pair<Circuit, BitMatrix>> cases{
        {add_circuit(n), add_target(n)},
        {swap_circuit(n), swap_target(n)},
        {rotate_circuit(n), rotate_target(n)},
        {reverse_circuit(n), reverse_target(n)},
    };
    const auto sigma = random_permutation(n, rng);
    cases.emplace_back(permutation_circuit(sigma), permutation_matrix(sigma));
    if (n <= 16) {
      const BitMatrix m = random_invertible(n, rng);
      cases.emplace_back(synthesize(m), m);
    }
    for (const auto& [c, target] : cases) {
      const BoundReport b = matrix_lower_bounds(target);
      const auto counts = crossing_counts(c);
      for (const CutBound& cb : b.per_cut) EXPECT_GE(counts[cb.k - 1], cb.crossings);
      EXPECT_GE(c.depth(), b.depth_lb);
      EXPECT_GE(c.size(), b.size_lb);
    }
  }
}

TEST(reversal_bounds, respected_by_reverse_circuit) {
  for (std::size_t n = 3; n <= 40; ++n) {
    const Circuit c = reverse_circuit(n);
    const auto [depth_lb, size_lb] = reversal_bounds(n);
    EXPECT_GE(c.depth(), depth_lb);
    EXPECT_LE(c.depth() - depth_lb, 1u);
    EXPECT_GE(c.size(), size_lb);
    const auto counts = crossing_counts(c);
    for (std::size_t k = 1; 2 * k <= n; ++k) {
      EXPECT_GE(counts[k - 1], reversal_cut_bound(n, k));
      EXPECT_GE(counts[n - k - 1], reversal_cut_bound(n, k));
    }
  }
}

// The fewest adjacent transpositions that realize sigma, by BFS over S_n.
TEST(permutation_swap_lower, equals_exact_swap_distance) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::size_t> start(n);
    std::iota(start.begin(), start.end(), std::size_t{1});
    std::map<std::vector<std::size_t>, std::size_t> dist{{start, 0}};
    std::deque<std::vector<std::size_t>> queue{start};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (std::size_t p = 0; p + 1 < n; ++p) {
        auto y = x;
        std::swap(y[p], y[p + 1]);
        if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
      }
    }
    for (const auto& [sigma, d] : dist) {
      const BoundReport r = permutation_swap_lower(sigma);
      EXPECT_EQ(r.size_lb, d);
      EXPECT_EQ(r.method, BoundMethod::kInversionCount);
      EXPECT_EQ(permutation_circuit(sigma).size(), 3 * d);
    }
  }
}
