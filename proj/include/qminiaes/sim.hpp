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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qminiaes/anf.hpp"
#include "qminiaes/circuit.hpp"

namespace qminiaes {

// Computational basis state plus the classical measurement record. The gate
// set (X, CNOT, Toffoli, MCX, SWAP, RESET) permutes basis states, so this
// simulation is exact and deterministic.
struct BasisState {
  std::vector<std::uint8_t> bits;
  std::vector<std::uint8_t> classical_bits;

  static BasisState zeros(const Circuit& c);
};

// Applies every gate in order. MEASURE copies the (already classical) qubit
// value into its classical bit. Throws std::invalid_argument on dimension
// mismatch.
BasisState run_basis(const Circuit& c, BasisState initial);

struct StateVector {
  std::uint32_t qubit_count = 0;
  std::vector<std::complex<double>> amplitudes;  // 2^qubit_count, unit norm

  static StateVector basis(std::uint32_t qubit_count, std::uint64_t index);
};

// A RESET whose outcome probability is not within 1e-9 of 0 or 1: the qubit
// was not classically determinate, which means an ancilla was recycled while
// still entangled or dirty.
class DirtyResetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateVectorRun {
  StateVector state;
  std::vector<std::uint8_t> classical_bits;
  std::size_t resets_checked = 0;
};

// Full statevector execution for desk-scale circuits (qubit_count must not
// exceed max_qubits). RESET is a projective measurement followed by a
// conditional flip; any nondeterminate RESET or MEASURE outcome throws.
StateVectorRun run_statevector(const Circuit& c,
                               std::uint64_t initial_basis_index = 0,
                               std::uint32_t max_qubits = 16);
StateVectorRun run_statevector(const Circuit& c, StateVector initial,
                               std::uint32_t max_qubits = 16);

struct Mismatch {
  std::uint32_t input;
  std::uint16_t expected;
  std::uint16_t actual;
};

struct CheckReport {
  std::size_t checks = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

// Runs run_basis for every input value of the table, loading input bit i
// onto input_qubits[i], and compares output_qubits (bit i of the table
// entry on output_qubits[i]) against the expected outputs. Mismatches are
// report content, not errors.
CheckReport exhaustive_check(const Circuit& c,
                             const std::vector<std::uint32_t>& input_qubits,
                             const TruthTable& expected,
                             const std::vector<std::uint32_t>& output_qubits);

}  // namespace qminiaes
