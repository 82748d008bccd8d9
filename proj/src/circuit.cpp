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

#include "qminiaes/circuit.hpp"

#include <stdexcept>
#include <utility>

namespace qminiaes {

namespace {

std::size_t expected_operands(GateKind k) {
  switch (k) {
    case GateKind::kX:
    case GateKind::kReset:
    case GateKind::kMeasure:
      return 1;
    case GateKind::kCnot:
    case GateKind::kSwap:
      return 2;
    case GateKind::kToffoli:
      return 3;
    case GateKind::kMcx:
      return 0;  // variable, >= 2 including the target
  }
  return 0;
}

}  // namespace

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::kX: return "x";
    case GateKind::kCnot: return "cx";
    case GateKind::kToffoli: return "ccx";
    case GateKind::kMcx: return "mcx";
    case GateKind::kSwap: return "swap";
    case GateKind::kReset: return "reset";
    case GateKind::kMeasure: return "measure";
  }
  return "?";
}

Circuit::Circuit(std::uint32_t qubit_count, std::uint32_t clbit_count,
                 std::string label)
    : qubit_count_(qubit_count),
      clbit_count_(clbit_count),
      label_(std::move(label)) {}

void Circuit::append(Gate g) {
  const std::size_t want = expected_operands(g.kind);
  if (g.kind == GateKind::kMcx) {
    if (g.qubits.size() < 2) {
      throw std::invalid_argument("mcx needs at least one control");
    }
  } else if (g.qubits.size() != want) {
    throw std::invalid_argument(std::string(gate_name(g.kind)) +
                                " takes " + std::to_string(want) +
                                " qubit operand(s)");
  }
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    if (g.qubits[i] >= qubit_count_) {
      throw std::out_of_range("qubit index " + std::to_string(g.qubits[i]) +
                              " out of range for " +
                              std::to_string(qubit_count_) + " qubits");
    }
    for (std::size_t j = i + 1; j < g.qubits.size(); ++j) {
      if (g.qubits[i] == g.qubits[j]) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) +
                                    " has duplicate operand " +
                                    std::to_string(g.qubits[i]));
      }
    }
  }
  if (g.kind == GateKind::kMeasure) {
    if (g.clbit < 0 || std::uint32_t(g.clbit) >= clbit_count_) {
      throw std::out_of_range("classical bit " + std::to_string(g.clbit) +
                              " out of range for " +
                              std::to_string(clbit_count_) + " clbits");
    }
  } else {
    g.clbit = -1;
  }
  gates_.push_back(std::move(g));
}

void Circuit::mcx(std::vector<std::uint32_t> controls, std::uint32_t target) {
  controls.push_back(target);
  append({GateKind::kMcx, std::move(controls), -1});
}

Circuit compose(Circuit a, const Circuit& b,
                const std::vector<std::uint32_t>& qubit_map) {
  if (qubit_map.size() != b.qubit_count()) {
    throw std::invalid_argument("qubit map must cover every qubit of b");
  }
  std::vector<bool> used(a.qubit_count(), false);
  for (std::uint32_t to : qubit_map) {
    if (to >= a.qubit_count()) {
      throw std::out_of_range("qubit map target " + std::to_string(to) +
                              " out of range");
    }
    if (used[to]) {
      throw std::invalid_argument("qubit map is not injective at " +
                                  std::to_string(to));
    }
    used[to] = true;
  }
  if (b.clbit_count() > a.clbit_count()) {
    throw std::out_of_range("b has more classical bits than a");
  }
  for (const Gate& g : b.gates()) {
    Gate mapped = g;
    for (auto& q : mapped.qubits) q = qubit_map[q];
    a.append(std::move(mapped));
  }
  return a;
}

QubitAllocator::QubitAllocator(std::uint32_t capacity)
    : capacity_(capacity), live_(capacity, false) {}

std::uint32_t QubitAllocator::alloc() {
  for (std::uint32_t q = 0; q < capacity_; ++q) {
    if (!live_[q]) {
      live_[q] = true;
      ++live_count_;
      if (live_count_ > high_water_mark_) high_water_mark_ = live_count_;
      if (std::int64_t(q) > max_index_used_) max_index_used_ = q;
      return q;
    }
  }
  throw std::runtime_error("qubit allocator capacity (" +
                           std::to_string(capacity_) + ") exhausted");
}

std::uint32_t QubitAllocator::alloc_index(std::uint32_t q) {
  if (q >= capacity_) {
    throw std::out_of_range("qubit " + std::to_string(q) +
                            " outside allocator capacity");
  }
  if (live_[q]) {
    throw std::invalid_argument("qubit " + std::to_string(q) +
                                " is already live");
  }
  live_[q] = true;
  ++live_count_;
  if (live_count_ > high_water_mark_) high_water_mark_ = live_count_;
  if (std::int64_t(q) > max_index_used_) max_index_used_ = q;
  return q;
}

void QubitAllocator::release(std::uint32_t q, Circuit& circuit) {
  if (q >= capacity_ || !live_[q]) {
    throw std::invalid_argument("releasing non-live qubit " +
                                std::to_string(q));
  }
  circuit.reset(q);
  live_[q] = false;
  --live_count_;
}

std::vector<LintViolation> lint_clean_reads(const Circuit& c) {
  std::vector<LintViolation> out;
  std::vector<bool> clean(c.qubit_count(), false);
  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    switch (g.kind) {
      case GateKind::kX:
        clean[g.qubits[0]] = false;
        break;
      case GateKind::kCnot:
      case GateKind::kToffoli:
      case GateKind::kMcx: {
        for (std::size_t k = 0; k + 1 < g.qubits.size(); ++k) {
          if (clean[g.qubits[k]]) out.push_back({i, g.qubits[k]});
        }
        clean[g.qubits.back()] = false;
        break;
      }
      case GateKind::kSwap: {
        const bool tmp = clean[g.qubits[0]];
        clean[g.qubits[0]] = clean[g.qubits[1]];
        clean[g.qubits[1]] = tmp;
        break;
      }
      case GateKind::kReset:
        clean[g.qubits[0]] = true;
        break;
      case GateKind::kMeasure:
        break;
    }
  }
  return out;
}

}  // namespace qminiaes
