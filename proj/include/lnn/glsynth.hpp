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

// Synthesis of an arbitrary invertible matrix in depth at most 5n.
//
// Two sorting-network driven stages take the state M back to the identity:
//   clearing:   depth <= 2d boxes bring M to northwest-triangular form N = M C;
//   reduction:  depth <= 3d boxes bring N to the identity, N R = I.
// Running both stages backward (R^-1 then C^-1) computes M.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/constructions.hpp"
#include "lnn/f2.hpp"

namespace lnn {

/// Wire contents together with the sorting labels carried through a network.
struct LabeledWireState {
  BitMatrix values;
  std::vector<std::size_t> labels;  // labels[w-1] is the label on wire w
  /// Target basis w_1..w_n and its dual functionals; empty during reduction.
  std::vector<BitVector> w_basis;
  std::vector<BitVector> duals;
};

/// Optional instrumentation for the two synthesis stages.
struct SynthesisTrace {
  /// Depth of every box emitted (one entry per comparator that fired).
  std::vector<std::size_t> box_depths;
  /// Called after each network layer with the current state.
  std::function<void(const LabeledWireState&)> after_layer;
};

struct NorthwestBasis {
  std::vector<BitVector> v;     // v_i: lex-least element of a_i + span{a_j : j > i}
  std::vector<std::size_t> pi;  // pi(i) = n + 1 - leading_index(v_i)
  std::vector<BitVector> w;     // w_j = v_{pi^-1(j)}
};

/// Lower-triangular change of basis of the columns of M after which the
/// leading coordinates of the basis vectors are all distinct.
inline NorthwestBasis northwest_basis(const BitMatrix& m) {
  if (!is_invertible(m)) throw SingularMatrixError("northwest_basis: matrix is singular");
  const std::size_t n = m.size();
  NorthwestBasis out{{}, std::vector<std::size_t>(n), std::vector<BitVector>(n)};
  out.v.reserve(n);
  std::vector<BitVector> later;
  for (std::size_t i = n; i >= 1; --i) {
    out.v.push_back(lex_min_coset(m.column(i), later));
    later.push_back(m.column(i));
  }
  std::reverse(out.v.begin(), out.v.end());
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t j = n + 1 - out.v[i - 1].leading_index();
    out.pi[i - 1] = j;
    out.w[j - 1] = out.v[i - 1];
  }
  return out;
}

/// Every wire value has zero w_k-coefficient for each label k sitting on a
/// wire above it.
inline bool clearing_invariant_holds(const LabeledWireState& s) {
  const std::size_t n = s.values.size();
  for (std::size_t i = 2; i <= n; ++i) {
    const BitVector x = s.values.column(i);
    for (std::size_t h = 1; h < i; ++h) {
      if (x.dot(s.duals[s.labels[h - 1] - 1])) return false;
    }
  }
  return true;
}

/// The two invariants of the reduction stage: a value on a wire with label k
/// has leading coordinate exactly k, and it is orthogonal to e_j for every
/// smaller label j sitting on a wire above it.
inline bool reduction_invariants_hold(const BitMatrix& values, const std::vector<std::size_t>& labels) {
  const std::size_t n = values.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const BitVector x = values.column(i);
    const std::size_t k = labels[i - 1];
    if (x.leading_index() != k) return false;
    for (std::size_t h = 1; h < i; ++h) {
      if (labels[h - 1] < k && x.get(labels[h - 1])) return false;
    }
  }
  return true;
}

/// Circuit C with depth <= 2 * depth(net) such that M C is northwest-triangular.
inline Circuit clearing_circuit(const BitMatrix& m, const ComparatorNetwork& net,
                                SynthesisTrace* trace = nullptr) {
  const std::size_t n = m.size();
  if (net.wires != n) throw std::invalid_argument("clearing_circuit: network size mismatch");
  NorthwestBasis nb = northwest_basis(m);
  LabeledWireState state{m, nb.pi, nb.w, dual_basis(nb.w)};

  GateList gates;
  for (const auto& layer : net.layers) {
    for (std::size_t p : layer) {
      const std::size_t upper_label = state.labels[p - 1];
      const std::size_t lower_label = state.labels[p];
      if (upper_label < lower_label) continue;
      std::swap(state.labels[p - 1], state.labels[p]);
      // Lower output must avoid w_k where k is the label now moving up.
      const BitVector& dual = state.duals[lower_label - 1];
      const BitVector u = state.values.column(p);
      const BitVector v = state.values.column(p + 1);
      BoxSpec spec{BoxValue::kU, BoxValue::kV};
      if (v.dot(dual)) {
        spec = (u ^ v).dot(dual) ? BoxSpec{BoxValue::kUV, BoxValue::kU}
                                 : BoxSpec{BoxValue::kU, BoxValue::kUV};
      }
      const GateList box = box_circuit(p, spec);
      state.values = apply_gates(box, std::move(state.values));
      gates.insert(gates.end(), box.begin(), box.end());
      if (trace) trace->box_depths.push_back(box.size());
    }
    if (trace && trace->after_layer) trace->after_layer(state);
  }
  return schedule(n, gates);
}

/// Circuit R with depth <= 3 * depth(net) such that N R = I, for invertible
/// northwest-triangular N.
inline Circuit triangular_reduction_circuit(const BitMatrix& nw, const ComparatorNetwork& net,
                                            SynthesisTrace* trace = nullptr) {
  const std::size_t n = nw.size();
  if (net.wires != n) throw std::invalid_argument("triangular_reduction_circuit: network size mismatch");
  if (!is_northwest_triangular(nw)) {
    throw std::invalid_argument("triangular_reduction_circuit: matrix is not northwest-triangular");
  }
  if (!is_invertible(nw)) throw SingularMatrixError("triangular_reduction_circuit: matrix is singular");

  std::vector<std::size_t> labels(n);
  for (std::size_t w = 1; w <= n; ++w) labels[w - 1] = n + 1 - w;
  // Comparators exercised by the reversal labeling; each becomes an unconditional swap.
  std::vector<std::size_t> probe = labels;
  const auto reversal_network = firing_comparators(net, probe);

  LabeledWireState state{nw, labels, {}, {}};
  GateList gates;
  for (const auto& layer : reversal_network) {
    for (std::size_t p : layer) {
      const std::size_t lower_label = state.labels[p];
      const BitVector u = state.values.column(p);
      const GateList box = u.get(lower_label) ? box_circuit(p, {BoxValue::kV, BoxValue::kUV})
                                              : box_circuit(p, {BoxValue::kV, BoxValue::kU});
      std::swap(state.labels[p - 1], state.labels[p]);
      state.values = apply_gates(box, std::move(state.values));
      gates.insert(gates.end(), box.begin(), box.end());
      if (trace) trace->box_depths.push_back(box.size());
    }
    if (trace && trace->after_layer) trace->after_layer(state);
  }
  return schedule(n, gates);
}

struct SynthesisStages {
  Circuit clearing;   // M C is northwest-triangular
  Circuit reduction;  // (M C) R = I
  Circuit circuit;    // R^-1 then C^-1; computes M
};

inline SynthesisStages synthesize_stages(const BitMatrix& m, SynthesisTrace* clearing_trace = nullptr,
                                         SynthesisTrace* reduction_trace = nullptr) {
  const ComparatorNetwork net = odd_even_network(m.size());
  Circuit c = clearing_circuit(m, net, clearing_trace);
  Circuit r = triangular_reduction_circuit(apply(c, m), net, reduction_trace);
  Circuit full = then(inverse(r), inverse(c));
  return {std::move(c), std::move(r), std::move(full)};
}

/// A circuit computing M with depth at most 5n. The identity gets the empty
/// circuit; the staged construction would reverse the wires twice.
inline Circuit synthesize(const BitMatrix& m) {
  if (m == BitMatrix::identity(m.size())) return Circuit(m.size());
  return synthesize_stages(m).circuit;
}

}  // namespace lnn
