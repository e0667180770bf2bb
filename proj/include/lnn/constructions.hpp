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

// Named circuit families on a line of wires. Every builder emits its gates in
// a fixed order and lets schedule() pack them; the emission order is what
// makes the nested cascades come out at the advertised depths.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/f2.hpp"

namespace lnn {

namespace detail {

inline void require_wires(std::size_t n, const char* what) {
  if (n < 2 || n > kMaxDim) {
    throw std::invalid_argument(std::string(what) + ": wire count must be in [2, 64]");
  }
}

inline std::size_t half_up(std::size_t n) { return (n + 1) / 2; }

inline void append(GateList& out, std::span<const Gate> more) {
  out.insert(out.end(), more.begin(), more.end());
}

inline GateList reversed(GateList gates) {
  std::reverse(gates.begin(), gates.end());
  return gates;
}

/// Three gates exchanging wires i and i+1.
inline GateList adjacent_swap(std::size_t i) { return {Gate::up(i), Gate::down(i), Gate::up(i)}; }

/// Moves the value on wire `from` down to wire `to` (from <= to) with three
/// ascending cascades. Afterwards wire `to` holds the old content of `from`
/// and wires from..to-1 hold combinations of the old contents of from+1..to.
inline GateList cascade_down(std::size_t from, std::size_t to) {
  GateList g;
  for (std::size_t i = from; i < to; ++i) g.push_back(Gate::up(i));
  for (std::size_t i = from; i < to; ++i) g.push_back(Gate::down(i));
  for (std::size_t i = from; i < to; ++i) g.push_back(Gate::up(i));
  return g;
}

/// Mirror image of cascade_down's role: moves the value on wire `from` up to
/// wire `to` (to <= from); wires to+1..from end up holding combinations of the
/// old contents of to..from-1.
inline GateList cascade_up(std::size_t from, std::size_t to) {
  GateList g;
  for (std::size_t i = from; i-- > to;) g.push_back(Gate::up(i));
  for (std::size_t i = from; i-- > to;) g.push_back(Gate::down(i));
  for (std::size_t i = from; i-- > to;) g.push_back(Gate::up(i));
  return g;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Boxes

/// Possible outputs of a two-wire box with upper input u and lower input v.
enum class BoxValue { kU, kV, kUV, kFree };

struct BoxSpec {
  BoxValue first = BoxValue::kU;   // upper output
  BoxValue second = BoxValue::kV;  // lower output
};

/// Gates on wires (position, position+1) realizing the spec at the minimum
/// depth: (u,v) 0, (u,u^v) 1, (u^v,v) 1, (u^v,u) 2, (v,u^v) 2, (v,u) 3.
/// With one output left free the cheapest completion is used (depth <= 2).
inline GateList box_circuit(std::size_t position, BoxSpec spec) {
  using V = BoxValue;
  if (spec.first == V::kFree && spec.second == V::kFree) {
    throw std::invalid_argument("box: at most one output may be free");
  }
  if (spec.first == spec.second) throw std::invalid_argument("box: outputs must be distinct");
  if (spec.first == V::kFree) {
    spec.first = spec.second == V::kV ? V::kU : spec.second == V::kUV ? V::kU : V::kUV;
  } else if (spec.second == V::kFree) {
    spec.second = spec.first == V::kU ? V::kV : spec.first == V::kUV ? V::kV : V::kUV;
  }
  const Gate up = Gate::up(position);
  const Gate down = Gate::down(position);
  if (spec.first == V::kU && spec.second == V::kV) return {};
  if (spec.first == V::kU && spec.second == V::kUV) return {down};
  if (spec.first == V::kUV && spec.second == V::kV) return {up};
  if (spec.first == V::kUV && spec.second == V::kU) return {up, down};
  if (spec.first == V::kV && spec.second == V::kUV) return {down, up};
  return {up, down, up};  // (v, u)
}

// ---------------------------------------------------------------------------
// Addition and swap across the whole array

/// wire n ends as a_1 ^ a_n, all other wires keep their values.
/// Depth n+3 (n even) or n+4 (n odd), size 4n-7.
inline Circuit add_circuit(std::size_t n) {
  detail::require_wires(n, "add_circuit");
  const std::size_t k = detail::half_up(n);
  // Afterwards wire k holds a_1 and a_n appears only on wire k+1.
  GateList sub;
  for (std::size_t i = 1; i < k; ++i) sub.push_back(Gate::up(i));
  for (std::size_t i = 1; i < k; ++i) sub.push_back(Gate::down(i));
  for (std::size_t i = n - 1; i > k; --i) sub.push_back(Gate::up(i));
  for (std::size_t i = n - 1; i > k; --i) sub.push_back(Gate::down(i));

  GateList all = sub;
  all.push_back(Gate::down(k));
  detail::append(all, detail::reversed(sub));
  return schedule(n, all);
}

/// Exchanges wires 1 and n. Depth n+7 (n even) or n+8 (n odd), size 6n-9.
inline Circuit swap_circuit(std::size_t n) {
  detail::require_wires(n, "swap_circuit");
  const std::size_t k = detail::half_up(n);
  if (n == 2) return schedule(n, detail::adjacent_swap(1));
  // Top half moves a_1 to wire k, bottom half moves a_n to wire k+1.
  GateList top = detail::cascade_down(1, k);
  GateList bottom = detail::cascade_up(n, k + 1);

  // The central swap is down(k) up(k) down(k). Its first gate commutes with the
  // last cascade of each half, so it is emitted right before them; the third
  // gate mirrors it on the way back.
  const std::size_t top_cut = 2 * (k - 1);
  const std::size_t bottom_cut = 2 * (n - 1 - k);
  GateList sub(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(top_cut));
  sub.insert(sub.end(), bottom.begin(), bottom.begin() + static_cast<std::ptrdiff_t>(bottom_cut));
  sub.push_back(Gate::down(k));
  sub.insert(sub.end(), top.begin() + static_cast<std::ptrdiff_t>(top_cut), top.end());
  sub.insert(sub.end(), bottom.begin() + static_cast<std::ptrdiff_t>(bottom_cut), bottom.end());

  GateList all = sub;
  all.push_back(Gate::up(k));
  detail::append(all, detail::reversed(sub));
  return schedule(n, all);
}

// ---------------------------------------------------------------------------
// Gathering scattered wires into a contiguous window

/// Measured bound on gather depth: depth(G) <= ceil(n/2) + kGatherDepthPerWire * m.
inline constexpr std::size_t kGatherDepthPerWire = 4;

struct GatherResult {
  Circuit circuit;
  /// Wire receiving the first selected value; the m values occupy
  /// window_start .. window_start + m - 1 in their original order.
  std::size_t window_start = 0;
};

/// Moves the values a_{i_1} < ... < a_{i_m} onto adjacent wires around the
/// middle of the array. Each selected value ends up alone on its window wire
/// and no other wire depends on it; running the circuit backward restores the
/// original state.
inline GatherResult gather_circuit(std::size_t n, std::span<const std::size_t> positions) {
  detail::require_wires(n, "gather_circuit");
  const std::size_t m = positions.size();
  if (m < 2 || m > n) throw std::invalid_argument("gather_circuit: need 2 <= m <= n positions");
  for (std::size_t l = 0; l < m; ++l) {
    if (positions[l] < 1 || positions[l] > n) {
      throw std::invalid_argument("gather_circuit: position out of range");
    }
    if (l > 0 && positions[l - 1] >= positions[l]) {
      throw std::invalid_argument("gather_circuit: positions must be strictly increasing");
    }
  }
  const std::size_t k = detail::half_up(n);
  // j = number of selected wires in the top half.
  const std::size_t j = static_cast<std::size_t>(
      std::upper_bound(positions.begin(), positions.end(), k) - positions.begin());
  const std::size_t window_start = k - j + 1;

  // Top half from the innermost selected wire outward, bottom half likewise.
  // Each cascade only touches wires between its source and its destination,
  // none of which carry a selected value that is still waiting to move.
  GateList gates;
  for (std::size_t l = j; l-- > 0;) {
    detail::append(gates, detail::cascade_down(positions[l], window_start + l));
  }
  for (std::size_t l = j; l < m; ++l) {
    detail::append(gates, detail::cascade_up(positions[l], window_start + l));
  }
  return {schedule(n, gates), window_start};
}

// ---------------------------------------------------------------------------
// Rotation

/// R(l, m): wire m receives a_l and wire i receives a_{i+1} for l <= i < m.
/// Size 4(m-l)-1, scheduled depth 2(m-l)+3 (3 when m = l+1).
inline GateList rotation_block(std::size_t first, std::size_t last) {
  if (first < 1 || first >= last) throw std::invalid_argument("rotation_block: need 1 <= l < m");
  GateList g;
  for (std::size_t i = first; i < last; ++i) g.push_back(Gate::down(i));
  for (std::size_t i = first; i < last; ++i) g.push_back(Gate::up(i));
  for (std::size_t i = first; i < last; ++i) g.push_back(Gate::down(i));
  for (std::size_t i = last - 1; i-- > first;) g.push_back(Gate::down(i));
  return g;
}

/// R'(l, m): R(l, m) mirrored within [l, m] and run backward. Mirroring a
/// rotation reverses its direction and running backward reverses it again,
/// so R' computes the same rotation as R.
inline GateList rotation_block_mirrored(std::size_t first, std::size_t last) {
  GateList g = rotation_block(first, last);
  std::reverse(g.begin(), g.end());
  for (Gate& gate : g) gate = {first + last - gate.target, first + last - gate.source};
  return g;
}

/// Cyclic shift: wire n receives a_1, wire i receives a_{i+1}. For n > 2 this
/// is R(1, k) followed by R'(k, n), k = ceil(n/2), with depth n+5 and size 4n-6.
inline Circuit rotate_circuit(std::size_t n) {
  detail::require_wires(n, "rotate_circuit");
  if (n == 2) return schedule(n, detail::adjacent_swap(1));
  const std::size_t k = detail::half_up(n);
  const GateList left = rotation_block(1, k);
  const GateList right = rotation_block_mirrored(k, n);
  // The last use of wire k by the left block and the first use by the right
  // block both write wire k and commute; emitting them in the opposite order
  // lets the right block start earlier.
  std::size_t last_left = left.size();
  while (last_left-- > 0 && !left[last_left].touches(k)) {}
  std::size_t first_right = 0;
  while (!right[first_right].touches(k)) ++first_right;

  GateList all(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(last_left));
  all.insert(all.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(first_right + 1));
  all.insert(all.end(), left.begin() + static_cast<std::ptrdiff_t>(last_left), left.end());
  all.insert(all.end(), right.begin() + static_cast<std::ptrdiff_t>(first_right + 1), right.end());
  return schedule(n, all);
}

// ---------------------------------------------------------------------------
// Reversal

/// Wire n+1-i receives a_i. Alternates the even-source and odd-source layers
/// n+1 times. Depth 2n+2 (3 when n = 2), size n^2-1.
inline Circuit reverse_circuit(std::size_t n) {
  detail::require_wires(n, "reverse_circuit");
  GateList gates;
  for (std::size_t t = 0; t <= n; ++t) {
    if (t % 2 == 0) {
      // even wires added into both neighbours
      for (std::size_t i = 1; i <= n / 2; ++i) gates.push_back(Gate::up(2 * i - 1));
      for (std::size_t i = 1; i <= (n - 1) / 2; ++i) gates.push_back(Gate::down(2 * i));
    } else {
      for (std::size_t i = 1; i <= n / 2; ++i) gates.push_back(Gate::down(2 * i - 1));
      for (std::size_t i = 1; i <= (n - 1) / 2; ++i) gates.push_back(Gate::up(2 * i));
    }
  }
  return schedule(n, gates);
}

// ---------------------------------------------------------------------------
// Sorting networks and permutations

/// Comparators on adjacent wires; position p compares wires p and p+1.
struct ComparatorNetwork {
  std::size_t wires = 0;
  std::vector<std::vector<std::size_t>> layers;

  std::size_t depth() const { return layers.size(); }
  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& layer : layers) s += layer.size();
    return s;
  }
};

/// Odd-even transposition sort: n layers alternating comparators at odd and
/// even positions. Depth n (1 when n = 2), size n(n-1)/2.
inline ComparatorNetwork odd_even_network(std::size_t n) {
  detail::require_wires(n, "odd_even_network");
  ComparatorNetwork net{n, {}};
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::size_t> layer;
    for (std::size_t p = (t % 2 == 0) ? 1 : 2; p < n; p += 2) layer.push_back(p);
    if (!layer.empty()) net.layers.push_back(std::move(layer));
  }
  return net;
}

/// Runs the network as a conditional-swap sorter on `labels` (1-based labels,
/// labels[w-1] on wire w). Returns the comparators that actually swapped, in
/// network order, with layer structure preserved.
inline std::vector<std::vector<std::size_t>> firing_comparators(const ComparatorNetwork& net,
                                                                std::vector<std::size_t>& labels) {
  std::vector<std::vector<std::size_t>> fired;
  for (const auto& layer : net.layers) {
    std::vector<std::size_t> f;
    for (std::size_t p : layer) {
      if (labels[p - 1] > labels[p]) {
        std::swap(labels[p - 1], labels[p]);
        f.push_back(p);
      }
    }
    fired.push_back(std::move(f));
  }
  return fired;
}

inline void check_permutation(std::span<const std::size_t> sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t v : sigma) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

/// Number of pairs i < j with sigma(i) > sigma(j).
inline std::size_t inversion_count(std::span<const std::size_t> sigma) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) inv += sigma[i] > sigma[j];
  }
  return inv;
}

/// Wire sigma(i) receives a_i (sigma given as images of 1..n). Comparators of
/// the odd-even network that would swap become 3-gate swaps; the rest are
/// dropped. Depth <= 3n, size 3 * inversions(sigma).
inline Circuit permutation_circuit(std::span<const std::size_t> sigma) {
  const std::size_t n = sigma.size();
  detail::require_wires(n, "permutation_circuit");
  check_permutation(sigma);
  std::vector<std::size_t> labels(sigma.begin(), sigma.end());
  GateList gates;
  for (const auto& layer : firing_comparators(odd_even_network(n), labels)) {
    for (std::size_t p : layer) detail::append(gates, detail::adjacent_swap(p));
  }
  return schedule(n, gates);
}

// ---------------------------------------------------------------------------
// Closed-form targets

inline BitMatrix add_target(std::size_t n) {
  BitMatrix m = BitMatrix::identity(n);
  m.set(1, n, true);
  return m;
}

inline BitMatrix permutation_matrix(std::span<const std::size_t> sigma) {
  check_permutation(sigma);
  BitMatrix m(sigma.size());
  for (std::size_t i = 1; i <= sigma.size(); ++i) m.set(i, sigma[i - 1], true);
  return m;
}

inline BitMatrix swap_target(std::size_t n) {
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i + 1;
  std::swap(sigma.front(), sigma.back());
  return permutation_matrix(sigma);
}

inline BitMatrix rotate_target(std::size_t n) {
  // a_1 goes to wire n, a_i to wire i-1.
  std::vector<std::size_t> sigma(n);
  sigma[0] = n;
  for (std::size_t i = 1; i < n; ++i) sigma[i] = i;
  return permutation_matrix(sigma);
}

inline BitMatrix reverse_target(std::size_t n) { return BitMatrix::anti_identity(n); }

}  // namespace lnn
