// Copyright 2026 The qminiaes Authors
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

#include "qminiaes/cost.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qminiaes {

std::uint64_t depth(const Circuit& c) {
  std::vector<std::uint64_t> last(c.qubit_count(), 0);
  std::uint64_t max_layer = 0;
  for (const Gate& g : c.gates()) {
    std::uint64_t layer = 0;
    for (std::uint32_t q : g.qubits) layer = std::max(layer, last[q]);
    ++layer;
    for (std::uint32_t q : g.qubits) last[q] = layer;
    max_layer = std::max(max_layer, layer);
  }
  return max_layer;
}

ResourceReport histogram(const Circuit& c) {
  ResourceReport r;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kX: ++r.counts.x; break;
      case GateKind::kCnot: ++r.counts.cnot; break;
      case GateKind::kToffoli: ++r.counts.toffoli; break;
      case GateKind::kMcx: ++r.counts.mcx; break;
      case GateKind::kSwap: ++r.counts.swap; break;
      case GateKind::kReset: ++r.counts.reset; break;
      case GateKind::kMeasure: ++r.counts.measure; break;
    }
  }
  r.total_gates = c.size();
  r.dag_depth = depth(c);
  r.qubit_count = c.qubit_count();
  r.clbit_count = c.clbit_count();
  return r;
}

std::uint64_t cnot_equivalent(const ResourceReport& report,
                              const CostWeights& weights) {
  if (weights.swap_weight < 1 || weights.toffoli_weight < 1 ||
      (weights.mcx_weight && *weights.mcx_weight < 1)) {
    throw std::invalid_argument("cost weights must be >= 1");
  }
  if (report.counts.mcx > 0 && !weights.mcx_weight) {
    throw std::invalid_argument(
        "circuit contains mcx gates but no mcx weight was given");
  }
  std::uint64_t total = report.counts.cnot +
                        weights.swap_weight * report.counts.swap +
                        weights.toffoli_weight * report.counts.toffoli;
  if (weights.mcx_weight) total += *weights.mcx_weight * report.counts.mcx;
  return total;
}

GroverEstimate grover_from_costs(unsigned key_bits,
                                 std::uint64_t cnot_equivalent_value,
                                 std::uint64_t not_count,
                                 std::uint64_t dag_depth,
                                 std::uint32_t qubit_count) {
  if (key_bits < 1 || key_bits > 64) {
    throw std::invalid_argument("key_bits must be in 1..64");
  }
  GroverEstimate e;
  e.key_bits = key_bits;
  e.iterations_real =
      std::numbers::pi * std::exp2(double(key_bits) / 2.0) / 4.0;
  e.iterations = std::uint64_t(std::floor(e.iterations_real));
  e.dag_depth = dag_depth;
  e.cnot_equivalent = cnot_equivalent_value;
  e.not_count = not_count;
  e.depth_cost = e.iterations * dag_depth;
  e.t_count_cost = e.iterations * (cnot_equivalent_value + not_count);
  e.qubit_cost_published_formula = e.iterations * qubit_count;
  e.oracle_qubits = qubit_count;
  return e;
}

GroverEstimate grover_estimate(const ResourceReport& report, unsigned key_bits,
                               std::uint64_t not_count,
                               const CostWeights& weights) {
  return grover_from_costs(key_bits, cnot_equivalent(report, weights),
                           not_count, report.dag_depth, report.qubit_count);
}

const std::vector<PublishedCounts>& published_reference_counts() {
  static const std::vector<PublishedCounts> rows = {
      {"first_sbox", -1, 52, 80, 28, 52, -1, 187,
       "covers the four first-round s-box applications"},
      {"round1", 24, 106, 80, 38, 72, 22, 207, ""},
      {"rearrangement", -1, 12, -1, -1, 12, -1, -1, ""},
      {"second_sbox", -1, 198, 160, 50, 156, 22, 395,
       "the published row labels its CNOT column SNOT"},
      {"round2", 28, 198, 160, 58, 156, 26, 397,
       "full two-round encryption"},
  };
  return rows;
}

const PublishedCounts* published_reference_for(const std::string& stage) {
  for (const PublishedCounts& row : published_reference_counts()) {
    if (row.stage == stage) return &row;
  }
  return nullptr;
}

}  // namespace qminiaes
