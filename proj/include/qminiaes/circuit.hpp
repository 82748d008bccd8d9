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
#include <string>
#include <vector>

namespace qminiaes {

enum class GateKind : std::uint8_t {
  kX,
  kCnot,
  kToffoli,
  kMcx,
  kSwap,
  kReset,
  kMeasure,
};

// Operand conventions: X/RESET/MEASURE hold one qubit; CNOT is
// {control, target}; TOFFOLI is {c1, c2, target}; MCX is {c..., target}
// with at least one control; SWAP is {a, b}. Only MEASURE uses clbit.
struct Gate {
  GateKind kind;
  std::vector<std::uint32_t> qubits;
  std::int32_t clbit = -1;

  friend bool operator==(const Gate&, const Gate&) = default;
};

const char* gate_name(GateKind k);

// Ordered gate list over a fixed number of qubits and classical bits.
// Append order is execution order. Every append validates operand indices
// (in range, pairwise distinct) and throws std::out_of_range /
// std::invalid_argument on violation.
class Circuit {
 public:
  Circuit() = default;
  Circuit(std::uint32_t qubit_count, std::uint32_t clbit_count = 0,
          std::string label = {});

  std::uint32_t qubit_count() const { return qubit_count_; }
  std::uint32_t clbit_count() const { return clbit_count_; }
  const std::string& label() const { return label_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  void append(Gate g);

  void x(std::uint32_t q) { append({GateKind::kX, {q}, -1}); }
  void cnot(std::uint32_t control, std::uint32_t target) {
    append({GateKind::kCnot, {control, target}, -1});
  }
  void toffoli(std::uint32_t c1, std::uint32_t c2, std::uint32_t target) {
    append({GateKind::kToffoli, {c1, c2, target}, -1});
  }
  void mcx(std::vector<std::uint32_t> controls, std::uint32_t target);
  void swap(std::uint32_t a, std::uint32_t b) {
    append({GateKind::kSwap, {a, b}, -1});
  }
  void reset(std::uint32_t q) { append({GateKind::kReset, {q}, -1}); }
  void measure(std::uint32_t q, std::uint32_t clbit) {
    append({GateKind::kMeasure, {q}, std::int32_t(clbit)});
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::uint32_t qubit_count_ = 0;
  std::uint32_t clbit_count_ = 0;
  std::string label_;
  std::vector<Gate> gates_;
};

// Appends b's gates to a with qubit indices remapped through qubit_map
// (qubit_map[i] is b's qubit i inside a). The map must cover b's qubits,
// be injective, and stay within a's range. b's classical bits keep their
// indices and must fit within a's clbit count.
Circuit compose(Circuit a, const Circuit& b,
                const std::vector<std::uint32_t>& qubit_map);

// Hands out work qubits from a fixed-capacity pool, lowest index first.
// release() emits a RESET into the circuit before recycling the index, so
// every recycled qubit re-enters the pool in |0>.
class QubitAllocator {
 public:
  explicit QubitAllocator(std::uint32_t capacity);

  std::uint32_t alloc();
  // Claims a specific free index; relocation stages use this to land a
  // nibble on its home qubits. Throws if q is out of range or live.
  std::uint32_t alloc_index(std::uint32_t q);
  void release(std::uint32_t q, Circuit& circuit);

  bool is_live(std::uint32_t q) const { return q < capacity_ && live_[q]; }

  std::uint32_t capacity() const { return capacity_; }
  std::uint32_t live_count() const { return live_count_; }
  // Maximum number of simultaneously live qubits seen so far.
  std::uint32_t high_water_mark() const { return high_water_mark_; }
  // Highest index ever handed out, or -1 if none; determines how wide the
  // final circuit really is.
  std::int64_t max_index_used() const { return max_index_used_; }

 private:
  std::uint32_t capacity_;
  std::vector<bool> live_;
  std::uint32_t live_count_ = 0;
  std::uint32_t high_water_mark_ = 0;
  std::int64_t max_index_used_ = -1;
};

// A control read of a qubit that is still clean (reset and not yet written).
struct LintViolation {
  std::size_t gate_index;
  std::uint32_t qubit;
};

// Flags CNOT/TOFFOLI/MCX gates whose control is clean at that point. A qubit
// becomes clean at its RESET and dirty again when a gate writes to it; SWAP
// exchanges the two flags. Controlling on a known-|0> qubit is a no-op, so
// every hit is a synthesis bug.
std::vector<LintViolation> lint_clean_reads(const Circuit& c);

}  // namespace qminiaes
