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

#include "qminiaes/sim.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qminiaes {

namespace {

constexpr double kTol = 1e-9;

}  // namespace

BasisState BasisState::zeros(const Circuit& c) {
  BasisState s;
  s.bits.assign(c.qubit_count(), 0);
  s.classical_bits.assign(c.clbit_count(), 0);
  return s;
}

BasisState run_basis(const Circuit& c, BasisState state) {
  if (state.bits.size() != c.qubit_count() ||
      state.classical_bits.size() != c.clbit_count()) {
    throw std::invalid_argument("basis state does not match circuit shape");
  }
  auto& bits = state.bits;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kX:
        bits[g.qubits[0]] ^= 1;
        break;
      case GateKind::kCnot:
        bits[g.qubits[1]] ^= bits[g.qubits[0]];
        break;
      case GateKind::kToffoli:
        bits[g.qubits[2]] ^= bits[g.qubits[0]] & bits[g.qubits[1]];
        break;
      case GateKind::kMcx: {
        std::uint8_t all = 1;
        for (std::size_t k = 0; k + 1 < g.qubits.size(); ++k) {
          all &= bits[g.qubits[k]];
        }
        bits[g.qubits.back()] ^= all;
        break;
      }
      case GateKind::kSwap:
        std::swap(bits[g.qubits[0]], bits[g.qubits[1]]);
        break;
      case GateKind::kReset:
        bits[g.qubits[0]] = 0;
        break;
      case GateKind::kMeasure:
        state.classical_bits[g.clbit] = bits[g.qubits[0]];
        break;
    }
  }
  return state;
}

StateVector StateVector::basis(std::uint32_t qubit_count,
                               std::uint64_t index) {
  StateVector v;
  v.qubit_count = qubit_count;
  v.amplitudes.assign(std::size_t(1) << qubit_count, {0.0, 0.0});
  v.amplitudes.at(index) = {1.0, 0.0};
  return v;
}

namespace {

double norm_squared(const StateVector& v) {
  double n = 0.0;
  for (const auto& a : v.amplitudes) n += std::norm(a);
  return n;
}

// Probability of reading |1> on qubit q.
double prob_one(const StateVector& v, std::uint32_t q) {
  const std::size_t mask = std::size_t(1) << q;
  double p = 0.0;
  for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
    if (i & mask) p += std::norm(v.amplitudes[i]);
  }
  return p;
}

void apply_controlled_x(StateVector& v, const std::vector<std::uint32_t>& ops) {
  // ops = controls..., target.
  std::size_t control_mask = 0;
  for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
    control_mask |= std::size_t(1) << ops[k];
  }
  const std::size_t target_mask = std::size_t(1) << ops.back();
  for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
    if ((i & control_mask) == control_mask && !(i & target_mask)) {
      std::swap(v.amplitudes[i], v.amplitudes[i | target_mask]);
    }
  }
}

}  // namespace

StateVectorRun run_statevector(const Circuit& c, StateVector initial,
                               std::uint32_t max_qubits) {
  if (c.qubit_count() > max_qubits) {
    throw std::invalid_argument(
        "statevector simulation capped at " + std::to_string(max_qubits) +
        " qubits; circuit has " + std::to_string(c.qubit_count()));
  }
  if (initial.qubit_count != c.qubit_count() ||
      initial.amplitudes.size() != (std::size_t(1) << c.qubit_count())) {
    throw std::invalid_argument("initial state does not match circuit shape");
  }
  StateVectorRun run;
  run.state = std::move(initial);
  run.classical_bits.assign(c.clbit_count(), 0);
  StateVector& v = run.state;

  const auto& gates = c.gates();
  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    const Gate& g = gates[gi];
    switch (g.kind) {
      case GateKind::kX:
        apply_controlled_x(v, g.qubits);
        break;
      case GateKind::kCnot:
      case GateKind::kToffoli:
      case GateKind::kMcx:
        apply_controlled_x(v, g.qubits);
        break;
      case GateKind::kSwap: {
        const std::size_t a = std::size_t(1) << g.qubits[0];
        const std::size_t b = std::size_t(1) << g.qubits[1];
        for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
          if ((i & a) && !(i & b)) {
            std::swap(v.amplitudes[i], v.amplitudes[(i ^ a) | b]);
          }
        }
        break;
      }
      case GateKind::kReset: {
        const std::uint32_t q = g.qubits[0];
        const double p1 = prob_one(v, q);
        ++run.resets_checked;
        const std::size_t mask = std::size_t(1) << q;
        if (p1 <= kTol) {
          for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
            if (i & mask) v.amplitudes[i] = {0.0, 0.0};
          }
        } else if (p1 >= 1.0 - kTol) {
          for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
            if (i & mask) {
              v.amplitudes[i ^ mask] = v.amplitudes[i];
              v.amplitudes[i] = {0.0, 0.0};
            }
          }
        } else {
          throw DirtyResetError("dirty reset at gate " + std::to_string(gi) +
                                " on qubit " + std::to_string(q) +
                                ": P(1) = " + std::to_string(p1));
        }
        // Renormalize away the measured-out residue.
        const double n = std::sqrt(norm_squared(v));
        for (auto& a : v.amplitudes) a /= n;
        break;
      }
      case GateKind::kMeasure: {
        const double p1 = prob_one(v, g.qubits[0]);
        if (p1 > kTol && p1 < 1.0 - kTol) {
          throw DirtyResetError("nondeterminate measurement at gate " +
                                std::to_string(gi) + " on qubit " +
                                std::to_string(g.qubits[0]));
        }
        run.classical_bits[g.clbit] = p1 >= 0.5 ? 1 : 0;
        break;
      }
    }
    const double n2 = norm_squared(v);
    if (std::abs(n2 - 1.0) > kTol) {
      throw std::logic_error("statevector norm drifted to " +
                             std::to_string(n2));
    }
  }
  return run;
}

StateVectorRun run_statevector(const Circuit& c,
                               std::uint64_t initial_basis_index,
                               std::uint32_t max_qubits) {
  if (c.qubit_count() > max_qubits) {
    throw std::invalid_argument(
        "statevector simulation capped at " + std::to_string(max_qubits) +
        " qubits; circuit has " + std::to_string(c.qubit_count()));
  }
  return run_statevector(c, StateVector::basis(c.qubit_count(),
                                               initial_basis_index),
                         max_qubits);
}

CheckReport exhaustive_check(const Circuit& c,
                             const std::vector<std::uint32_t>& input_qubits,
                             const TruthTable& expected,
                             const std::vector<std::uint32_t>& output_qubits) {
  expected.validate();
  if (input_qubits.size() != expected.input_bits) {
    throw std::invalid_argument("input qubit list does not match table arity");
  }
  if (output_qubits.size() != expected.output_bits) {
    throw std::invalid_argument("output qubit list does not match table arity");
  }
  CheckReport report;
  const std::uint32_t n = expected.input_bits;
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    BasisState s = BasisState::zeros(c);
    for (std::uint32_t i = 0; i < n; ++i) {
      s.bits[input_qubits[i]] = (v >> i) & 1;
    }
    const BasisState out = run_basis(c, std::move(s));
    std::uint16_t actual = 0;
    for (std::size_t i = 0; i < output_qubits.size(); ++i) {
      actual = std::uint16_t(actual | (out.bits[output_qubits[i]] << i));
    }
    ++report.checks;
    if (actual != expected.outputs[v]) {
      report.mismatches.push_back({v, expected.outputs[v], actual});
    }
  }
  return report;
}

}  // namespace qminiaes
