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

// Lower-bound certificates that depend only on the target matrix.
//
// Cut argument: split the wires at k | k+1 and view the state as the block
// matrix (W X; Y Z). Every circuit starts from I (ranks k, 0, 0, n-k). Only
// gates across the cut change the blocks: an upward gate rewrites column k,
// moving rank(W) and rank(Y) by at most one each; a downward gate rewrites
// column k+1, moving rank(X) and rank(Z) by at most one each.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lnn/constructions.hpp"
#include "lnn/f2.hpp"

namespace lnn {

enum class BoundMethod { kRankCut, kReversalClosedForm, kInversionCount };

inline const char* to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::kRankCut: return "rank-cut";
    case BoundMethod::kReversalClosedForm: return "reversal-closed-form";
    case BoundMethod::kInversionCount: return "inversion-count";
  }
  return "?";
}

struct CutBound {
  std::size_t k = 0;
  std::size_t crossings = 0;
};

struct BoundReport {
  std::vector<CutBound> per_cut;
  std::size_t depth_lb = 0;
  std::size_t size_lb = 0;
  BoundMethod method = BoundMethod::kRankCut;
};

/// Minimum number of gates between wires k and k+1 in any circuit computing m.
inline std::size_t cut_lower_bound(const BitMatrix& m, std::size_t k) {
  const CutBlocks b = blocks(m, k);
  const std::size_t n = m.size();
  const std::size_t rw = rank(b.w), rx = rank(b.x), ry = rank(b.y), rz = rank(b.z);
  const std::size_t up = std::max(k - rw, ry);
  const std::size_t down = std::max(rx, (n - k) - rz);
  return up + down;
}

/// Any reversal of n wires has at least 2k+1 gates across cut k, 1 <= k <= n/2.
inline std::size_t reversal_cut_bound(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k > n) throw std::out_of_range("reversal_cut_bound: need 1 <= k <= n/2");
  return 2 * k + 1;
}

/// (depth, size) lower bounds for reversing n >= 3 wires: 2n+1 and floor(n^2/2)+n.
inline std::pair<std::size_t, std::size_t> reversal_bounds(std::size_t n) {
  if (n < 3) throw std::invalid_argument("reversal_bounds: n must be at least 3");
  return {2 * n + 1, n * n / 2 + n};
}

/// Per-cut bounds for m; size bound is their sum, depth bound the largest
/// total over the two cuts touching a single wire (those gates all share it).
inline BoundReport matrix_lower_bounds(const BitMatrix& m) {
  if (!is_invertible(m)) throw SingularMatrixError("matrix_lower_bounds: matrix is singular");
  const std::size_t n = m.size();
  BoundReport r;
  r.method = BoundMethod::kRankCut;
  std::vector<std::size_t> cut(n + 1, 0);  // cut[0] and cut[n] stay 0
  for (std::size_t k = 1; k < n; ++k) {
    cut[k] = cut_lower_bound(m, k);
    r.per_cut.push_back({k, cut[k]});
    r.size_lb += cut[k];
  }
  for (std::size_t w = 1; w <= n; ++w) r.depth_lb = std::max(r.depth_lb, cut[w - 1] + cut[w]);
  return r;
}

/// A swap network realizing sigma needs at least inversions(sigma) adjacent swaps.
inline BoundReport permutation_swap_lower(std::span<const std::size_t> sigma) {
  check_permutation(sigma);
  BoundReport r;
  r.method = BoundMethod::kInversionCount;
  r.size_lb = inversion_count(sigma);
  return r;
}

}  // namespace lnn
