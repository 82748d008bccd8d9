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

#include "qminiaes/synth.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <utility>

namespace qminiaes {

namespace {

std::vector<unsigned> vars_of(AnfMonomial m) {
  std::vector<unsigned> v;
  for (unsigned i = 0; i < 16; ++i) {
    if ((m >> i) & 1u) v.push_back(i);
  }
  return v;
}

void check_distinct(const std::vector<std::uint32_t>& qubits,
                    const char* what) {
  std::set<std::uint32_t> seen(qubits.begin(), qubits.end());
  if (seen.size() != qubits.size()) {
    throw std::invalid_argument(std::string(what) + " indices collide");
  }
}

struct ShareGroup {
  AnfMonomial sub = 0;             // the shared quadratic mask
  bool sub_present = false;        // the quadratic is itself a monomial
  std::vector<AnfMonomial> cubes;  // cubic monomials containing sub
};

// Greedy per-equation grouping: repeatedly claim the quadratic sub-product
// with the largest Toffoli saving (ties go to the lowest mask) until no
// claim saves anything. A sub-product covering n remaining cubics saves
// n - 1 Toffolis, plus one more when the quadratic is itself a monomial.
std::vector<ShareGroup> plan_share_groups(const AnfPolynomial& poly) {
  std::set<AnfMonomial> cubes;
  std::set<AnfMonomial> pairs;
  for (AnfMonomial m : poly.monomials) {
    const int pc = std::popcount(unsigned(m));
    if (pc == 3) cubes.insert(m);
    if (pc == 2) pairs.insert(m);
  }
  std::vector<ShareGroup> groups;
  while (true) {
    AnfMonomial best = 0;
    int best_saving = 0;
    for (AnfMonomial s = 3; s < 16; ++s) {
      if (std::popcount(unsigned(s)) != 2) continue;
      int covered = 0;
      for (AnfMonomial cube : cubes) {
        if ((cube & s) == s) ++covered;
      }
      if (covered == 0) continue;
      const int saving = covered - 1 + (pairs.count(s) ? 1 : 0);
      if (saving > best_saving) {
        best = s;
        best_saving = saving;
      }
    }
    if (best_saving < 1) break;
    ShareGroup g;
    g.sub = best;
    g.sub_present = pairs.erase(best) > 0;
    for (auto it = cubes.begin(); it != cubes.end();) {
      if ((*it & best) == best) {
        g.cubes.push_back(*it);
        it = cubes.erase(it);
      } else {
        ++it;
      }
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

void emit_monomial(Circuit& c, AnfMonomial m, const SboxLayout& L) {
  const auto v = vars_of(m);
  switch (v.size()) {
    case 0:
      c.x(L.equation_target);
      break;
    case 1:
      c.cnot(L.input_qubits[v[0]], L.equation_target);
      break;
    case 2:
      c.toffoli(L.input_qubits[v[0]], L.input_qubits[v[1]],
                L.equation_target);
      break;
    default:
      c.toffoli(L.input_qubits[v[0]], L.input_qubits[v[1]], L.ancilla);
      c.toffoli(L.ancilla, L.input_qubits[v[2]], L.equation_target);
      c.reset(L.ancilla);
      break;
  }
}

// Multiply-by-two matrix rows, destination bit -> source bit mask:
// d0 = b3, d1 = b0 xor b3, d2 = b1, d3 = b2.
constexpr std::array<std::uint8_t, 4> kMul2Rows = {0b1000, 0b1001, 0b0010,
                                                   0b0100};

void append_mul(Circuit& c, const std::array<std::uint32_t, 4>& src,
                const std::array<std::uint32_t, 4>& dst, bool add_identity) {
  std::vector<std::uint32_t> all(src.begin(), src.end());
  all.insert(all.end(), dst.begin(), dst.end());
  check_distinct(all, "multiplier source/destination");
  for (unsigned d = 0; d < 4; ++d) {
    std::uint8_t row = kMul2Rows[d];
    if (add_identity) row = std::uint8_t(row ^ (1u << d));
    for (unsigned b = 0; b < 4; ++b) {
      if ((row >> b) & 1u) c.cnot(src[b], dst[d]);
    }
  }
}

void move_nibble(Circuit& c, QubitAllocator& alloc, StateMap& map, unsigned n,
                 const std::array<std::uint32_t, 4>& dst,
                 RelocationStyle style) {
  const auto src = nibble_qubits(map, n);
  for (unsigned j = 0; j < 4; ++j) {
    if (style == RelocationStyle::kCnotCopy) {
      c.cnot(src[j], dst[j]);
    } else {
      c.swap(src[j], dst[j]);
    }
  }
  for (unsigned j = 0; j < 4; ++j) alloc.release(src[j], c);
  for (unsigned j = 0; j < 4; ++j) map[4 * n + j] = dst[j];
}

}  // namespace

void SboxLayout::validate(std::uint32_t qubit_count) const {
  std::vector<std::uint32_t> all(input_qubits.begin(), input_qubits.end());
  all.push_back(ancilla);
  all.push_back(equation_target);
  all.insert(all.end(), memory_qubits.begin(), memory_qubits.end());
  for (std::uint32_t q : all) {
    if (q >= qubit_count) {
      throw std::out_of_range("layout qubit " + std::to_string(q) +
                              " outside circuit of width " +
                              std::to_string(qubit_count));
    }
  }
  check_distinct(all, "substitution layout");
}

StateMap canonical_state_map() {
  StateMap m;
  for (std::uint32_t i = 0; i < 16; ++i) m[i] = i;
  return m;
}

std::array<std::uint32_t, 4> nibble_qubits(const StateMap& map,
                                           unsigned nibble) {
  return {map[4 * nibble], map[4 * nibble + 1], map[4 * nibble + 2],
          map[4 * nibble + 3]};
}

void append_anf_equation(Circuit& c, const AnfPolynomial& poly,
                         const SboxLayout& layout,
                         const SynthOptions& options) {
  layout.validate(c.qubit_count());
  for (AnfMonomial m : poly.monomials) {
    if (m & AnfMonomial(~0xFu)) {
      throw std::invalid_argument("equation uses variables beyond x3");
    }
    if (std::popcount(unsigned(m)) > 3) {
      throw std::invalid_argument(
          "equation degree exceeds 3; one ancilla cannot stage it");
    }
  }
  std::vector<ShareGroup> groups;
  if (options.share_subproducts) groups = plan_share_groups(poly);
  std::set<AnfMonomial> grouped;
  for (const ShareGroup& g : groups) {
    if (g.sub_present) grouped.insert(g.sub);
    grouped.insert(g.cubes.begin(), g.cubes.end());
  }
  // Ungrouped monomials first, in ascending mask order (the polynomial is
  // kept sorted), then one ancilla round per group.
  for (AnfMonomial m : poly.monomials) {
    if (!grouped.count(m)) emit_monomial(c, m, layout);
  }
  for (const ShareGroup& g : groups) {
    const auto v = vars_of(g.sub);
    c.toffoli(layout.input_qubits[v[0]], layout.input_qubits[v[1]],
              layout.ancilla);
    if (g.sub_present) c.cnot(layout.ancilla, layout.equation_target);
    for (AnfMonomial cube : g.cubes) {
      const unsigned third = vars_of(AnfMonomial(cube & ~g.sub))[0];
      c.toffoli(layout.ancilla, layout.input_qubits[third],
                layout.equation_target);
    }
    c.reset(layout.ancilla);
  }
}

void append_sbox(Circuit& c, const AnfSystem& system, const SboxLayout& layout,
                 const SynthOptions& options) {
  layout.validate(c.qubit_count());
  if (system.input_bits != 4 || system.polys.size() != 4) {
    throw std::invalid_argument("substitution block needs a 4-bit system");
  }
  for (unsigned j = 0; j < 4; ++j) {
    const AnfPolynomial& poly = system.polys[j];
    if (poly.monomials.empty()) continue;  // output bit identically zero
    append_anf_equation(c, poly, layout, options);
    c.cnot(layout.equation_target, layout.memory_qubits[j]);
    c.reset(layout.equation_target);
  }
}

void append_mul2(Circuit& c, const std::array<std::uint32_t, 4>& src,
                 const std::array<std::uint32_t, 4>& dst) {
  append_mul(c, src, dst, false);
}

void append_mul3(Circuit& c, const std::array<std::uint32_t, 4>& src,
                 const std::array<std::uint32_t, 4>& dst) {
  append_mul(c, src, dst, true);
}

void append_shift_row(Circuit& c, const std::array<std::uint32_t, 4>& nibble1,
                      const std::array<std::uint32_t, 4>& nibble3) {
  std::vector<std::uint32_t> all(nibble1.begin(), nibble1.end());
  all.insert(all.end(), nibble3.begin(), nibble3.end());
  check_distinct(all, "row shift nibble");
  for (unsigned j = 0; j < 4; ++j) c.swap(nibble1[j], nibble3[j]);
}

void append_key_addition(Circuit& c, const Block& key, const StateMap& state) {
  for (std::size_t n = 0; n < 4; ++n) {
    for (unsigned j = 0; j < 4; ++j) {
      if (key.bit(n, j)) c.x(state[4 * n + j]);
    }
  }
}

void append_key_addition(Circuit& c,
                         const std::array<std::uint32_t, 16>& key_register,
                         const StateMap& state) {
  std::vector<std::uint32_t> all(key_register.begin(), key_register.end());
  all.insert(all.end(), state.begin(), state.end());
  check_distinct(all, "key register / state");
  for (std::size_t i = 0; i < 16; ++i) c.cnot(key_register[i], state[i]);
}

void append_relocation(Circuit& c, QubitAllocator& alloc, StateMap& map,
                       const StateMap& homes, const SynthOptions& options) {
  for (int guard = 0; guard < 16; ++guard) {
    std::vector<unsigned> pending;
    for (unsigned n = 0; n < 4; ++n) {
      if (nibble_qubits(map, n) != nibble_qubits(homes, n)) pending.push_back(n);
    }
    if (pending.empty()) return;
    bool moved = false;
    for (unsigned n : pending) {
      const auto home = nibble_qubits(homes, n);
      const bool home_free = std::none_of(
          home.begin(), home.end(),
          [&](std::uint32_t q) { return alloc.is_live(q); });
      if (!home_free) continue;
      std::array<std::uint32_t, 4> dst;
      for (unsigned j = 0; j < 4; ++j) dst[j] = alloc.alloc_index(home[j]);
      move_nibble(c, alloc, map, n, dst, options.relocation);
      moved = true;
      break;
    }
    if (!moved) {
      // Every pending home is occupied: evict one nibble to scratch to
      // break the occupancy cycle.
      std::array<std::uint32_t, 4> scratch;
      for (auto& q : scratch) q = alloc.alloc();
      move_nibble(c, alloc, map, pending.front(), scratch,
                  options.relocation);
    }
  }
  throw std::logic_error("nibble relocation did not converge");
}

void append_mix_column(Circuit& c, QubitAllocator& alloc, StateMap& map) {
  // Column pairs (2,3) then (0,1); the odd output first within each pair.
  for (unsigned lo : {2u, 0u}) {
    const unsigned hi = lo + 1;
    const auto src_lo = nibble_qubits(map, lo);
    const auto src_hi = nibble_qubits(map, hi);
    std::array<std::uint32_t, 4> w_hi;
    std::array<std::uint32_t, 4> w_lo;
    for (auto& q : w_hi) q = alloc.alloc();
    append_mul2(c, src_lo, w_hi);  // out(hi) = 2*lo xor 3*hi
    append_mul3(c, src_hi, w_hi);
    for (auto& q : w_lo) q = alloc.alloc();
    append_mul3(c, src_lo, w_lo);  // out(lo) = 3*lo xor 2*hi
    append_mul2(c, src_hi, w_lo);
    for (std::uint32_t q : src_lo) alloc.release(q, c);
    for (std::uint32_t q : src_hi) alloc.release(q, c);
    for (unsigned j = 0; j < 4; ++j) {
      map[4 * lo + j] = w_lo[j];
      map[4 * hi + j] = w_hi[j];
    }
  }
}

const AssemblyStage* AssemblyPlan::stage(const std::string& name) const {
  for (const AssemblyStage& s : stages) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

class Assembler {
 public:
  Assembler(KeyMode mode, const SynthOptions& options, std::string label)
      : mode_(mode),
        options_(options),
        capacity_(kFullQubitBudget +
                  (mode == KeyMode::kKeyRegister ? kKeyRegisterQubits : 0)),
        c_(capacity_, 16, std::move(label)),
        alloc_(capacity_) {
    plan_.mode = mode;
  }

  void load_state(const std::optional<Block>& value) {
    for (auto& q : map_) q = alloc_.alloc();  // 0..15 in slot order
    if (value) {
      for (std::size_t n = 0; n < 4; ++n) {
        for (unsigned j = 0; j < 4; ++j) {
          if (value->bit(n, j)) c_.x(map_[4 * n + j]);
        }
      }
    }
    record("load_input");
  }

  void load_key_register(const Block& first_key) {
    for (auto& q : key_reg_) q = alloc_.alloc();  // 16..31
    xor_into_register(first_key);
    record("load_key_register");
  }

  void add_key(const Block& k, const std::string& stage) {
    if (mode_ == KeyMode::kClassicalKey) {
      append_key_addition(c_, k, map_);
    } else {
      append_key_addition(c_, key_reg_, map_);
    }
    record(stage);
  }

  // Register mode only: flip the register from holding `from` to `to`.
  void remask_key(const Block& from, const Block& to,
                  const std::string& stage) {
    xor_into_register(from ^ to);
    record(stage);
  }

  void sbox_stage(const AnfSystem& system, const std::string& stage) {
    anc_ = alloc_.alloc();
    tgt_ = alloc_.alloc();
    for (unsigned n = 0; n < 4; ++n) {
      SboxLayout layout;
      layout.input_qubits = nibble_qubits(map_, n);
      layout.ancilla = anc_;
      layout.equation_target = tgt_;
      for (auto& q : layout.memory_qubits) q = alloc_.alloc();
      append_sbox(c_, system, layout, options_);
      for (std::uint32_t q : layout.input_qubits) alloc_.release(q, c_);
      for (unsigned j = 0; j < 4; ++j) {
        map_[4 * n + j] = layout.memory_qubits[j];
      }
    }
    record(stage);
  }

  void shift_row_stage(const std::string& stage) {
    append_shift_row(c_, nibble_qubits(map_, 1), nibble_qubits(map_, 3));
    record(stage);
  }

  void mix_column_stages() {
    release_workers();
    append_mix_column(c_, alloc_, map_);
    record("mix_column");
    append_relocation(c_, alloc_, map_, canonical_state_map(), options_);
    record("relocation");
    plan_.round1_high_water_mark = alloc_.high_water_mark();
  }

  void measure_stage() {
    release_workers();
    for (std::uint32_t s = 0; s < 16; ++s) c_.measure(map_[s], s);
    record("measure");
  }

  Assembly finish() {
    plan_.high_water_mark = alloc_.high_water_mark();
    if (plan_.round1_high_water_mark == 0) {
      plan_.round1_high_water_mark = plan_.high_water_mark;
    }
    const std::uint32_t extra =
        mode_ == KeyMode::kKeyRegister ? kKeyRegisterQubits : 0;
    if (plan_.round1_high_water_mark > kRound1QubitBudget + extra) {
      throw std::logic_error(
          "round-one qubit budget violated: " +
          std::to_string(plan_.round1_high_water_mark) + " live, budget " +
          std::to_string(kRound1QubitBudget + extra));
    }
    if (plan_.high_water_mark > kFullQubitBudget + extra) {
      throw std::logic_error("qubit budget violated: " +
                             std::to_string(plan_.high_water_mark) +
                             " live, budget " +
                             std::to_string(kFullQubitBudget + extra));
    }
    plan_.total_qubits = std::uint32_t(alloc_.max_index_used() + 1);
    // Rebuild at the width actually used so reports reflect real cost.
    Circuit out(plan_.total_qubits, c_.clbit_count(), c_.label());
    for (const Gate& g : c_.gates()) out.append(g);
    return Assembly{std::move(out), std::move(plan_)};
  }

 private:
  void record(const std::string& name) {
    plan_.stages.push_back(
        AssemblyStage{name, map_, alloc_.live_count(), c_.size()});
  }

  void release_workers() {
    alloc_.release(anc_, c_);
    alloc_.release(tgt_, c_);
  }

  void xor_into_register(const Block& mask) {
    for (std::size_t n = 0; n < 4; ++n) {
      for (unsigned j = 0; j < 4; ++j) {
        if (mask.bit(n, j)) c_.x(key_reg_[4 * n + j]);
      }
    }
  }

  KeyMode mode_;
  SynthOptions options_;
  std::uint32_t capacity_;
  Circuit c_;
  QubitAllocator alloc_;
  AssemblyPlan plan_;
  StateMap map_{};
  std::array<std::uint32_t, 16> key_reg_{};
  std::uint32_t anc_ = 0;
  std::uint32_t tgt_ = 0;
};

}  // namespace

Assembly assemble_encrypt(const std::optional<Block>& plaintext,
                          const Block& key, KeyMode mode,
                          const SynthOptions& options) {
  const RoundKeys rk = key_schedule(key);
  const AnfSystem system = derive_anf_system(sbox_truth_table());
  Assembler a(mode, options, "encrypt");
  a.load_state(plaintext);
  if (mode == KeyMode::kKeyRegister) a.load_key_register(rk.k0);
  a.add_key(rk.k0, "add_round_key_0");
  a.sbox_stage(system, "sbox_1");
  a.shift_row_stage("shift_row_1");
  a.mix_column_stages();
  if (mode == KeyMode::kKeyRegister) a.remask_key(rk.k0, rk.k1, "remask_key_1");
  a.add_key(rk.k1, "add_round_key_1");
  a.sbox_stage(system, "sbox_2");
  a.shift_row_stage("shift_row_2");
  if (mode == KeyMode::kKeyRegister) a.remask_key(rk.k1, rk.k2, "remask_key_2");
  a.add_key(rk.k2, "add_round_key_2");
  a.measure_stage();
  return a.finish();
}

Assembly assemble_decrypt(const std::optional<Block>& cipher, const Block& key,
                          KeyMode mode, const SynthOptions& options) {
  const RoundKeys rk = key_schedule(key);
  const AnfSystem system = derive_anf_system(inv_sbox_truth_table());
  Assembler a(mode, options, "decrypt");
  a.load_state(cipher);
  if (mode == KeyMode::kKeyRegister) a.load_key_register(rk.k2);
  a.add_key(rk.k2, "add_round_key_2");
  a.shift_row_stage("shift_row_1");
  a.sbox_stage(system, "inv_sbox_1");
  if (mode == KeyMode::kKeyRegister) a.remask_key(rk.k2, rk.k1, "remask_key_1");
  a.add_key(rk.k1, "add_round_key_1");
  a.mix_column_stages();
  a.shift_row_stage("shift_row_2");
  a.sbox_stage(system, "inv_sbox_2");
  if (mode == KeyMode::kKeyRegister) a.remask_key(rk.k1, rk.k0, "remask_key_0");
  a.add_key(rk.k0, "add_round_key_0");
  a.measure_stage();
  return a.finish();
}

Assembly assemble_round1(const std::optional<Block>& plaintext,
                         const Block& key, KeyMode mode,
                         const SynthOptions& options) {
  const RoundKeys rk = key_schedule(key);
  const AnfSystem system = derive_anf_system(sbox_truth_table());
  Assembler a(mode, options, "round1");
  a.load_state(plaintext);
  if (mode == KeyMode::kKeyRegister) a.load_key_register(rk.k0);
  a.add_key(rk.k0, "add_round_key_0");
  a.sbox_stage(system, "sbox_1");
  a.shift_row_stage("shift_row_1");
  a.mix_column_stages();
  if (mode == KeyMode::kKeyRegister) a.remask_key(rk.k0, rk.k1, "remask_key_1");
  a.add_key(rk.k1, "add_round_key_1");
  return a.finish();
}

SboxLayout standalone_sbox_layout() {
  SboxLayout layout;
  layout.input_qubits = {0, 1, 2, 3};
  layout.ancilla = 4;
  layout.equation_target = 5;
  layout.memory_qubits = {6, 7, 8, 9};
  return layout;
}

Circuit synth_sbox_circuit(bool inverse, const SynthOptions& options) {
  Circuit c(10, 0, inverse ? "inv-sbox" : "sbox");
  const AnfSystem system =
      derive_anf_system(inverse ? inv_sbox_truth_table() : sbox_truth_table());
  append_sbox(c, system, standalone_sbox_layout(), options);
  return c;
}

Circuit synth_mul2_circuit() {
  Circuit c(8, 0, "mul2");
  append_mul2(c, {0, 1, 2, 3}, {4, 5, 6, 7});
  return c;
}

Circuit synth_mul3_circuit() {
  Circuit c(8, 0, "mul3");
  append_mul3(c, {0, 1, 2, 3}, {4, 5, 6, 7});
  return c;
}

Circuit synth_mix_column_circuit(const SynthOptions& options) {
  Circuit c(kRound1QubitBudget, 0, "mixcolumn");
  QubitAllocator alloc(kRound1QubitBudget);
  StateMap map;
  for (auto& q : map) q = alloc.alloc();
  append_mix_column(c, alloc, map);
  append_relocation(c, alloc, map, canonical_state_map(), options);
  return c;
}

Circuit synth_shift_row_circuit() {
  Circuit c(16, 0, "shiftrow");
  const StateMap map = canonical_state_map();
  append_shift_row(c, nibble_qubits(map, 1), nibble_qubits(map, 3));
  return c;
}

}  // namespace qminiaes
