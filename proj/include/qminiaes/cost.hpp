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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qminiaes/circuit.hpp"

namespace qminiaes {

struct GateCounts {
  std::uint64_t x = 0;
  std::uint64_t cnot = 0;
  std::uint64_t toffoli = 0;
  std::uint64_t mcx = 0;
  std::uint64_t swap = 0;
  std::uint64_t reset = 0;
  std::uint64_t measure = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct ResourceReport {
  GateCounts counts;
  std::uint64_t total_gates = 0;
  std::uint64_t dag_depth = 0;
  std::uint32_t qubit_count = 0;
  std::uint32_t clbit_count = 0;
};

// SWAP and Toffoli weights follow the published accounting convention
// (SWAP = 3 CNOT, Toffoli-3 = 6 CNOT). MCX has no published weight and is
// rejected unless one is supplied.
struct CostWeights {
  std::uint64_t swap_weight = 3;
  std::uint64_t toffoli_weight = 6;
  std::optional<std::uint64_t> mcx_weight;
};

// Number of parallel layers when gates on disjoint qubits share a layer.
// Greedy per-qubit availability: a gate lands one layer after the latest
// layer among its operand qubits. RESET and MEASURE occupy their qubit for
// one layer like any other gate.
std::uint64_t depth(const Circuit& c);

// One-pass gate census plus depth and circuit dimensions.
ResourceReport histogram(const Circuit& c);

// cnot + swap_weight*swap + toffoli_weight*toffoli (+ mcx if weighted).
// X, RESET and MEASURE are excluded; the NOT count enters the Grover
// estimate as a separate additive term. Throws std::invalid_argument for
// zero weights or for MCX gates without an explicit weight.
std::uint64_t cnot_equivalent(const ResourceReport& report,
                              const CostWeights& weights = {});

struct GroverEstimate {
  unsigned key_bits = 0;
  double iterations_real = 0.0;   // pi * 2^(key_bits/2) / 4
  std::uint64_t iterations = 0;   // floored
  std::uint64_t dag_depth = 0;
  std::uint64_t cnot_equivalent = 0;
  std::uint64_t not_count = 0;
  std::uint64_t depth_cost = 0;        // iterations * dag_depth
  std::uint64_t t_count_cost = 0;      // iterations * (cnot_equivalent + not)
  // The published formula multiplies the qubit count by the iteration
  // count; reported verbatim, next to the standard reading that the oracle
  // register is reused across iterations.
  std::uint64_t qubit_cost_published_formula = 0;
  std::uint32_t oracle_qubits = 0;
};

GroverEstimate grover_from_costs(unsigned key_bits,
                                 std::uint64_t cnot_equivalent_value,
                                 std::uint64_t not_count,
                                 std::uint64_t dag_depth,
                                 std::uint32_t qubit_count);

GroverEstimate grover_estimate(const ResourceReport& report, unsigned key_bits,
                               std::uint64_t not_count,
                               const CostWeights& weights = {});

// Stage rows of the published resource table, reproduced for side-by-side
// comparison in reports. Never asserted: the published construction is not
// described precisely enough to re-derive them. -1 marks an unreported cell.
struct PublishedCounts {
  std::string stage;
  std::int64_t qubits = -1;
  std::int64_t cnot = -1;
  std::int64_t toffoli = -1;
  std::int64_t x = -1;
  std::int64_t reset = -1;
  std::int64_t swap = -1;
  std::int64_t depth = -1;
  std::string note;
};

const std::vector<PublishedCounts>& published_reference_counts();

// Row lookup by stage name ("first_sbox", "round1", "rearrangement",
// "second_sbox", "round2"); null when the stage has no published row.
const PublishedCounts* published_reference_for(const std::string& stage);

}  // namespace qminiaes
