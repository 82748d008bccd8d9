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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qminiaes/anf.hpp"
#include "qminiaes/circuit.hpp"
#include "qminiaes/miniaes.hpp"

namespace qminiaes {

// Qubit roles for one substitution block. input_qubits[i] carries input bit i
// (LSB first) and memory_qubits[i] receives output bit i. ancilla and
// equation_target must be |0> at block entry; the block returns them to |0>.
struct SboxLayout {
  std::array<std::uint32_t, 4> input_qubits;
  std::uint32_t ancilla = 0;
  std::uint32_t equation_target = 0;
  std::array<std::uint32_t, 4> memory_qubits;

  // All ten indices distinct and within qubit_count; throws otherwise.
  void validate(std::uint32_t qubit_count) const;
};

enum class KeyMode : std::uint8_t { kClassicalKey, kKeyRegister };
enum class RelocationStyle : std::uint8_t { kCnotCopy, kSwap };

struct SynthOptions {
  // Reuse one ancilla computation for monomials sharing a quadratic
  // sub-product within an equation. Off by default so the baseline gate
  // census stays the reference point.
  bool share_subproducts = false;
  // CNOT-copy-then-reset is the default nibble move; SWAP mode exists for
  // comparability with reports that count SWAPs.
  RelocationStyle relocation = RelocationStyle::kCnotCopy;
};

// Where each state bit lives: entry 4*nibble + bit (bit 0 = LSB) -> qubit.
using StateMap = std::array<std::uint32_t, 16>;

// bit (n, j) -> qubit 4n + j.
StateMap canonical_state_map();

std::array<std::uint32_t, 4> nibble_qubits(const StateMap& map,
                                           unsigned nibble);

// XORs poly(input_qubits) into equation_target (assumed |0> on entry, so it
// ends up holding the value). Constant term -> X; linear -> CNOT; quadratic
// -> TOFFOLI; cubic -> TOFFOLI pair through the ancilla plus a RESET.
// Throws std::invalid_argument for degree > 3 or variables beyond x3.
void append_anf_equation(Circuit& c, const AnfPolynomial& poly,
                         const SboxLayout& layout,
                         const SynthOptions& options = {});

// Full substitution block: per output bit, equation synthesis into the
// target, CNOT copy-out to the memory qubit, RESET of the target. Inputs are
// read-only, so the block leaves them bit-identical.
void append_sbox(Circuit& c, const AnfSystem& system, const SboxLayout& layout,
                 const SynthOptions& options = {});

// dst ^= 2*src (resp. 3*src) in GF(2^4), pure CNOT fan-out from the
// multiply-by-two matrix rows (plus the identity for 3 = 2 xor 1). With dst
// clean this is an out-of-place multiply; dirty dst accumulates.
void append_mul2(Circuit& c, const std::array<std::uint32_t, 4>& src,
                 const std::array<std::uint32_t, 4>& dst);
void append_mul3(Circuit& c, const std::array<std::uint32_t, 4>& src,
                 const std::array<std::uint32_t, 4>& dst);

// Positionwise content exchange of the two nibble registers: exactly 4 SWAPs.
void append_shift_row(Circuit& c, const std::array<std::uint32_t, 4>& nibble1,
                      const std::array<std::uint32_t, 4>& nibble3);

// Classical key addition: one X per set key bit, on the state qubits.
void append_key_addition(Circuit& c, const Block& key, const StateMap& state);
// Register key addition: CNOT(key_register[i], state[i]), 16 gates.
void append_key_addition(Circuit& c,
                         const std::array<std::uint32_t, 16>& key_register,
                         const StateMap& state);

// Moves every nibble whose current position differs from its home. A nibble
// whose home qubits are all free moves directly (CNOT copy plus source
// RESET, or SWAP); occupancy cycles are broken by evicting one nibble to
// scratch qubits. Updates map in place.
void append_relocation(Circuit& c, QubitAllocator& alloc, StateMap& map,
                       const StateMap& homes, const SynthOptions& options = {});

// Out-of-place MixColumn halves: per column pair, two multiplier blocks
// accumulate into freshly allocated work nibbles and the sources are
// released. The map is updated to the work positions; callers follow with
// append_relocation to land on homes. Needs 8 free qubits at the peak. The
// odd output of each pair is synthesized first so a lowest-index-first
// allocator lands it directly on its home in the standard schedules.
void append_mix_column(Circuit& c, QubitAllocator& alloc, StateMap& map);

// One assembly stage boundary: where each state bit sits once the stage has
// run, how many qubits are live, and the end of the stage's gate range.
struct AssemblyStage {
  std::string name;
  StateMap state;
  std::uint32_t live_qubits = 0;
  std::size_t gate_end = 0;
};

struct AssemblyPlan {
  KeyMode mode = KeyMode::kClassicalKey;
  std::uint32_t total_qubits = 0;            // final circuit width
  std::uint32_t high_water_mark = 0;         // overall live-qubit peak
  std::uint32_t round1_high_water_mark = 0;  // peak through the relocation
  std::vector<AssemblyStage> stages;

  const AssemblyStage* stage(const std::string& name) const;
};

struct Assembly {
  Circuit circuit;
  AssemblyPlan plan;
};

// Hard ceilings asserted at assembly time. Key-register mode carries 16 more
// always-live qubits, so its ceilings shift by that amount.
inline constexpr std::uint32_t kRound1QubitBudget = 24;
inline constexpr std::uint32_t kFullQubitBudget = 28;
inline constexpr std::uint32_t kKeyRegisterQubits = 16;

// Full two-round encryption: load xor K0, four S-box applications into fresh
// memory, ShiftRow, MixColumn with relocation, xor K1, four S-box
// applications, ShiftRow, xor K2, measurement of all 16 state bits (clbit
// 4n+j holds bit j of cipher nibble n). If plaintext is absent the circuit
// expects caller-prepared input qubits at the canonical positions. Throws
// std::logic_error if a qubit budget is violated during construction.
Assembly assemble_encrypt(const std::optional<Block>& plaintext,
                          const Block& key,
                          KeyMode mode = KeyMode::kClassicalKey,
                          const SynthOptions& options = {});

// Mirror of assemble_encrypt under the inverse substitution system, with the
// stage order reversed around MixColumn (keys enter K2 first).
Assembly assemble_decrypt(const std::optional<Block>& cipher, const Block& key,
                          KeyMode mode = KeyMode::kClassicalKey,
                          const SynthOptions& options = {});

// Round-one prefix: everything up to and including the xor K1 stage, no
// measurement. The state ends at the canonical positions.
Assembly assemble_round1(const std::optional<Block>& plaintext,
                         const Block& key,
                         KeyMode mode = KeyMode::kClassicalKey,
                         const SynthOptions& options = {});

// Fixed layouts for the standalone circuits below (and the CLI).
SboxLayout standalone_sbox_layout();  // in 0-3, ancilla 4, target 5, mem 6-9

// 10-qubit substitution block over the built-in table (or its inverse).
Circuit synth_sbox_circuit(bool inverse = false,
                           const SynthOptions& options = {});
// 8-qubit multiplier blocks: src 0-3, dst 4-7.
Circuit synth_mul2_circuit();
Circuit synth_mul3_circuit();
// 24-qubit MixColumn: state 0-15 in and out, work qubits 16-23.
Circuit synth_mix_column_circuit(const SynthOptions& options = {});
// 16-qubit ShiftRow on the canonical layout.
Circuit synth_shift_row_circuit();

}  // namespace qminiaes
