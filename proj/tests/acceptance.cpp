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

// Acceptance gate. Ten independent checks, one PASS/FAIL line each,
// nonzero exit when any line fails. Deliberately framework-free so the
// output reads as a checklist. Known deviations from the published test
// vectors are documented in docs/errata.md; a FAIL here that points there
// is a faithful report, not a broken build.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qminiaes/anf.hpp"
#include "qminiaes/circuit.hpp"
#include "qminiaes/cost.hpp"
#include "qminiaes/emit.hpp"
#include "qminiaes/miniaes.hpp"
#include "qminiaes/sim.hpp"
#include "qminiaes/synth.hpp"

namespace {

using namespace qminiaes;
using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

Block block_from_bits(const std::vector<std::uint8_t>& bits,
                      const StateMap& map) {
  Block b;
  for (std::size_t n = 0; n < 4; ++n)
    for (unsigned j = 0; j < 4; ++j)
      if (bits[map[4 * n + j]]) b[n] = Nibble(b[n] | (1u << j));
  return b;
}

// clbit 4n+j carries bit j of cipher nibble n.
Block block_from_clbits(const std::vector<std::uint8_t>& cl) {
  Block b;
  for (std::size_t n = 0; n < 4; ++n)
    for (unsigned j = 0; j < 4; ++j)
      if (cl[4 * n + j]) b[n] = Nibble(b[n] | (1u << j));
  return b;
}

// State bits decoded at a named stage boundary, by replaying the gate
// prefix that ends there.
Block state_at(const Assembly& a, const std::string& stage_name) {
  const AssemblyStage* stage = a.plan.stage(stage_name);
  if (stage == nullptr) throw std::logic_error("missing stage " + stage_name);
  Circuit prefix(a.circuit.qubit_count(), a.circuit.clbit_count());
  for (std::size_t i = 0; i < stage->gate_end; ++i)
    prefix.append(a.circuit.gates()[i]);
  const BasisState end = run_basis(prefix, BasisState::zeros(prefix));
  return block_from_bits(end.bits, stage->state);
}

Block run_cipher(const Circuit& c, const std::optional<Block>& input) {
  BasisState in = BasisState::zeros(c);
  if (input) {
    for (std::size_t n = 0; n < 4; ++n)
      for (unsigned j = 0; j < 4; ++j)
        in.bits[4 * n + j] = std::uint8_t(input->bit(n, j));
  }
  return block_from_clbits(run_basis(c, std::move(in)).classical_bits);
}

Block random_block(std::mt19937& rng) {
  return Block::from_value(std::uint16_t(rng() & 0xffff));
}

TruthTable mul_table(Nibble k) {
  TruthTable t;
  t.input_bits = 4;
  t.output_bits = 4;
  t.outputs.resize(16);
  for (std::uint16_t v = 0; v < 16; ++v) t.outputs[v] = gf16_mul(k, Nibble(v));
  return t;
}

void table_check(Outcome& o, const std::string& name, const Circuit& c,
                 const TruthTable& expected,
                 const std::vector<std::uint32_t>& in,
                 const std::vector<std::uint32_t>& out) {
  const CheckReport r = exhaustive_check(c, in, expected, out);
  if (!r.passed())
    o.fail(name + ": " + std::to_string(r.mismatches.size()) + "/" +
           std::to_string(r.checks) + " mismatches");
}

const Block kRow1Plain = Block::parse("1001 1100 0110 0011");
const Block kRow1Key = Block::parse("1100 0011 1111 0000");

// 1. Published test vector row 1, every trace column, by the classical
//    reference and by basis simulation of the assembled circuit. Under 1 s.
Outcome criterion_1() {
  Outcome o;
  const auto t0 = Clock::now();
  const Block sbox1 = Block::parse("1111 0111 1010 0001");
  const Block perm1 = Block::parse("0000 1110 0011 1110");
  const Block sbox2 = Block::parse("0001 0000 0101 0100");
  const Block cipher = Block::parse("0111 0010 1100 0110");

  const EncryptionTrace tr = encrypt(kRow1Plain, kRow1Key);
  if (tr.after_sbox1 != sbox1) o.fail("classical sbox1 column");
  if (tr.after_permutations1 != perm1) o.fail("classical permutations1 column");
  if (tr.after_sbox2 != sbox2) o.fail("classical sbox2 column");
  if (tr.cipher != cipher) o.fail("classical cipher column");

  const Assembly enc = assemble_encrypt(kRow1Plain, kRow1Key);
  if (state_at(enc, "sbox_1") != sbox1) o.fail("circuit sbox1 column");
  if (state_at(enc, "relocation") != perm1)
    o.fail("circuit permutations1 column");
  if (state_at(enc, "sbox_2") != sbox2) o.fail("circuit sbox2 column");
  if (run_cipher(enc.circuit, std::nullopt) != cipher)
    o.fail("circuit cipher column");

  const auto elapsed = ms_since(t0);
  if (elapsed >= 1000)
    o.fail("runtime " + std::to_string(elapsed) + " ms, budget 1000 ms");
  o.note(std::to_string(elapsed) + " ms");
  return o;
}

// 2. Published test vector rows 2 and 3. Row 3 is checked under its
//    documented completion: row 2's plaintext with row 3's key. The
//    published row 3 tail is internally inconsistent with its own head;
//    docs/errata.md carries the bit-level analysis.
Outcome criterion_2() {
  Outcome o;
  const Block plain = Block::parse("1111 0101 1010 1111");

  const EncryptionTrace row2 = encrypt(plain, kRow1Key);
  if (row2.after_sbox1 != Block::parse("0001 1011 1111 0111"))
    o.fail("row 2 sbox1 column");
  const Block cipher2 = Block::parse("0110 0011 1010 1010");
  if (row2.cipher != cipher2) o.fail("row 2 classical cipher");
  if (run_cipher(assemble_encrypt(plain, kRow1Key).circuit, std::nullopt) !=
      cipher2)
    o.fail("row 2 circuit cipher");

  const Block key3 = Block::parse("1111 0101 1101 1110");
  const Block expected3 = Block::parse("1111 0010 1111 1001");
  const Block got3 = encrypt(plain, key3).cipher;
  if (got3 != expected3)
    o.fail("row 3 cipher: published " + expected3.to_string() + ", computed " +
           got3.to_string() + " (see docs/errata.md)");
  return o;
}

// 3. ANF derivation reproduces the published equation system per output
//    bit, as monomial sets; the Moebius transform is an involution on
//    1000 random coefficient vectors.
Outcome criterion_3() {
  Outcome o;
  const std::vector<std::vector<AnfMonomial>> published = {
      {0b0010, 0b0101, 0b1000, 0b1001, 0b1011},
      {0b0000, 0b0001, 0b0010, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100,
       0b1101, 0b1110},
      {0b0000, 0b0011, 0b0100, 0b0101, 0b1000, 0b1010, 0b1011},
      {0b0000, 0b0001, 0b0100, 0b0110, 0b0111, 0b1000, 0b1100, 0b1110},
  };

  const AnfSystem s = derive_anf_system(sbox_truth_table());
  if (s.polys.size() != published.size()) {
    o.fail("system has " + std::to_string(s.polys.size()) + " outputs");
    return o;
  }
  for (std::size_t bit = 0; bit < published.size(); ++bit) {
    std::vector<AnfMonomial> got = s.polys[bit].monomials;
    std::sort(got.begin(), got.end());
    if (got != published[bit])
      o.fail("output bit " + std::to_string(bit) + " monomial set differs");
  }

  std::mt19937 rng(0x5eed);
  for (int round = 0; round < 1000; ++round) {
    std::vector<std::uint8_t> f(16);
    for (auto& v : f) v = std::uint8_t(rng() & 1);
    if (moebius_transform(moebius_transform(f)) != f) {
      o.fail("Moebius involution broke on round " + std::to_string(round));
      break;
    }
  }
  return o;
}

// 4. Exhaustive block equivalence against the classical primitives.
Outcome criterion_4() {
  Outcome o;
  const std::vector<std::uint32_t> in = {0, 1, 2, 3};
  const std::vector<std::uint32_t> mem = {6, 7, 8, 9};
  const std::vector<std::uint32_t> dst = {4, 5, 6, 7};
  table_check(o, "sbox", synth_sbox_circuit(false), sbox_truth_table(), in,
              mem);
  table_check(o, "inv-sbox", synth_sbox_circuit(true), inv_sbox_truth_table(),
              in, mem);
  table_check(o, "mul2", synth_mul2_circuit(), mul_table(2), in, dst);
  table_check(o, "mul3", synth_mul3_circuit(), mul_table(3), in, dst);

  const Circuit mix = synth_mix_column_circuit();
  const StateMap canonical = canonical_state_map();
  std::mt19937 rng(0x313);
  for (int round = 0; round < 256; ++round) {
    const Block b = random_block(rng);
    BasisState in = BasisState::zeros(mix);
    for (std::size_t n = 0; n < 4; ++n)
      for (unsigned j = 0; j < 4; ++j)
        in.bits[4 * n + j] = std::uint8_t(b.bit(n, j));
    const BasisState end = run_basis(mix, std::move(in));
    if (block_from_bits(end.bits, canonical) != mix_column(b)) {
      o.fail("mix-column mismatch on round " + std::to_string(round));
      break;
    }
  }
  return o;
}

// 5. Full-cipher equivalence: exhaustive plaintext sweep under the row 1
//    key, 1000 random pairs, 100 decrypt roundtrips. Bit-exact.
Outcome criterion_5() {
  Outcome o;
  const auto t0 = Clock::now();
  const Assembly enc = assemble_encrypt(std::nullopt, kRow1Key);
  for (std::uint32_t v = 0; v < 65536; ++v) {
    const Block p = Block::from_value(std::uint16_t(v));
    if (run_cipher(enc.circuit, p) != encrypt(p, kRow1Key).cipher) {
      o.fail("sweep mismatch at plaintext " + std::to_string(v));
      break;
    }
  }
  const auto sweep_ms = ms_since(t0);
  if (sweep_ms >= 60000)
    o.fail("sweep took " + std::to_string(sweep_ms) + " ms, budget 60000 ms");

  std::mt19937 rng(0xcafe);
  for (int round = 0; round < 1000; ++round) {
    const Block p = random_block(rng);
    const Block k = random_block(rng);
    if (run_cipher(assemble_encrypt(p, k).circuit, std::nullopt) !=
        encrypt(p, k).cipher) {
      o.fail("random pair mismatch on round " + std::to_string(round));
      break;
    }
  }
  for (int round = 0; round < 100; ++round) {
    const Block p = random_block(rng);
    const Block k = random_block(rng);
    const Block c = encrypt(p, k).cipher;
    if (run_cipher(assemble_decrypt(c, k).circuit, std::nullopt) != p) {
      o.fail("decrypt roundtrip mismatch on round " + std::to_string(round));
      break;
    }
  }
  o.note("sweep " + std::to_string(sweep_ms) + " ms");
  return o;
}

// 6. Qubit budgets: round 1 within 24, full encrypt/decrypt within 28.
Outcome criterion_6() {
  Outcome o;
  const Assembly r1 = assemble_round1(kRow1Plain, kRow1Key);
  const Assembly enc = assemble_encrypt(kRow1Plain, kRow1Key);
  const Assembly dec = assemble_decrypt(encrypt(kRow1Plain, kRow1Key).cipher,
                                        kRow1Key);
  const auto check = [&o](const char* name, const AssemblyPlan& plan,
                          std::uint32_t budget) {
    if (plan.high_water_mark > budget || plan.total_qubits > budget)
      o.fail(std::string(name) + " peak " +
             std::to_string(plan.high_water_mark) + "/" +
             std::to_string(plan.total_qubits) + " over " +
             std::to_string(budget));
  };
  check("round1", r1.plan, kRound1QubitBudget);
  check("encrypt", enc.plan, kFullQubitBudget);
  check("decrypt", dec.plan, kFullQubitBudget);
  if (enc.plan.round1_high_water_mark > kRound1QubitBudget)
    o.fail("encrypt round-1 peak " +
           std::to_string(enc.plan.round1_high_water_mark) + " over " +
           std::to_string(kRound1QubitBudget));
  o.note("round1 " + std::to_string(r1.plan.high_water_mark) + ", encrypt " +
         std::to_string(enc.plan.high_water_mark) + ", decrypt " +
         std::to_string(dec.plan.high_water_mark));
  return o;
}

// 7. Cost arithmetic on the published worked example, exact integers.
Outcome criterion_7() {
  Outcome o;
  ResourceReport rep;
  rep.counts.cnot = 198;
  rep.counts.toffoli = 160;
  rep.counts.swap = 26;
  const std::uint64_t ce = cnot_equivalent(rep);
  if (ce != 1236) o.fail("cnot-equivalent " + std::to_string(ce) + " != 1236");

  const GroverEstimate g = grover_from_costs(16, 1236, 58, 397, 28);
  if (g.iterations != 201)
    o.fail("iterations " + std::to_string(g.iterations) + " != 201");
  if (g.t_count_cost != 260094)
    o.fail("t-count cost " + std::to_string(g.t_count_cost) + " != 260094");
  if (g.depth_cost != 79797)
    o.fail("depth cost " + std::to_string(g.depth_cost) + " != 79797");
  return o;
}

// 8. Baseline substitution census is exact; the sharing pass strictly
//    reduces Toffolis while staying exhaustively equivalent.
Outcome criterion_8() {
  Outcome o;
  const GateCounts base = histogram(synth_sbox_circuit(false)).counts;
  if (base.toffoli != 25 || base.cnot != 13 || base.x != 3 ||
      base.reset != 10)
    o.fail("baseline census " + std::to_string(base.toffoli) + "/" +
           std::to_string(base.cnot) + "/" + std::to_string(base.x) + "/" +
           std::to_string(base.reset) + " != 25/13/3/10");

  SynthOptions sharing;
  sharing.share_subproducts = true;
  const std::vector<std::uint32_t> in = {0, 1, 2, 3};
  const std::vector<std::uint32_t> mem = {6, 7, 8, 9};
  const Circuit fwd = synth_sbox_circuit(false, sharing);
  const std::uint64_t shared_toffoli = histogram(fwd).counts.toffoli;
  if (shared_toffoli >= base.toffoli)
    o.fail("sharing left " + std::to_string(shared_toffoli) + " Toffolis");
  table_check(o, "sharing sbox", fwd, sbox_truth_table(), in, mem);
  table_check(o, "sharing inv-sbox", synth_sbox_circuit(true, sharing),
              inv_sbox_truth_table(), in, mem);
  o.note("Toffoli " + std::to_string(base.toffoli) + " -> " +
         std::to_string(shared_toffoli));
  return o;
}

// 9. Reset hygiene. Statevector execution of every standalone block of at
//    most 16 qubits, over every basis input, must observe only
//    deterministic resets; the linter must find no control reads of clean
//    qubits in any synthesized circuit.
Outcome criterion_9() {
  Outcome o;
  SynthOptions sharing;
  sharing.share_subproducts = true;

  const std::vector<std::pair<std::string, Circuit>> small = {
      {"sbox", synth_sbox_circuit(false)},
      {"inv-sbox", synth_sbox_circuit(true)},
      {"sbox-sharing", synth_sbox_circuit(false, sharing)},
      {"inv-sbox-sharing", synth_sbox_circuit(true, sharing)},
      {"mul2", synth_mul2_circuit()},
      {"mul3", synth_mul3_circuit()},
      {"shiftrow", synth_shift_row_circuit()},
  };
  std::size_t resets_checked = 0;
  for (const auto& [name, c] : small) {
    const std::uint64_t inputs = std::uint64_t(1) << c.qubit_count();
    for (std::uint64_t v = 0; v < inputs; ++v) {
      try {
        resets_checked += run_statevector(c, v, 16).resets_checked;
      } catch (const DirtyResetError& e) {
        o.fail(name + " input " + std::to_string(v) + ": " + e.what());
        break;
      }
    }
    if (!o.pass) break;
  }

  SynthOptions swap_mode;
  swap_mode.relocation = RelocationStyle::kSwap;
  const Block cipher = encrypt(kRow1Plain, kRow1Key).cipher;
  const std::vector<std::pair<std::string, Circuit>> assembled = {
      {"encrypt", assemble_encrypt(kRow1Plain, kRow1Key).circuit},
      {"decrypt", assemble_decrypt(cipher, kRow1Key).circuit},
      {"round1", assemble_round1(kRow1Plain, kRow1Key).circuit},
      {"encrypt-keyreg",
       assemble_encrypt(kRow1Plain, kRow1Key, KeyMode::kKeyRegister).circuit},
      {"decrypt-keyreg",
       assemble_decrypt(cipher, kRow1Key, KeyMode::kKeyRegister).circuit},
      {"encrypt-swap",
       assemble_encrypt(kRow1Plain, kRow1Key, KeyMode::kClassicalKey,
                        swap_mode)
           .circuit},
      {"encrypt-sharing",
       assemble_encrypt(kRow1Plain, kRow1Key, KeyMode::kClassicalKey, sharing)
           .circuit},
      {"mixcolumn", synth_mix_column_circuit()},
  };
  for (const auto& [name, c] : assembled) {
    const auto hits = lint_clean_reads(c);
    if (!hits.empty())
      o.fail(name + ": " + std::to_string(hits.size()) + " clean-read hits");
  }
  o.note(std::to_string(resets_checked) + " resets checked");
  return o;
}

// 10. Text roundtrip identity on every synthesized circuit plus 100
//     randomized ones; repeated assembly exports byte-identically.
Outcome criterion_10() {
  Outcome o;
  SynthOptions sharing;
  sharing.share_subproducts = true;
  SynthOptions swap_mode;
  swap_mode.relocation = RelocationStyle::kSwap;
  const Block cipher = encrypt(kRow1Plain, kRow1Key).cipher;

  std::vector<Circuit> circuits = {
      synth_sbox_circuit(false),
      synth_sbox_circuit(true),
      synth_sbox_circuit(false, sharing),
      synth_sbox_circuit(true, sharing),
      synth_mul2_circuit(),
      synth_mul3_circuit(),
      synth_mix_column_circuit(),
      synth_mix_column_circuit(swap_mode),
      synth_shift_row_circuit(),
      assemble_encrypt(kRow1Plain, kRow1Key).circuit,
      assemble_decrypt(cipher, kRow1Key).circuit,
      assemble_round1(kRow1Plain, kRow1Key).circuit,
      assemble_encrypt(kRow1Plain, kRow1Key, KeyMode::kKeyRegister).circuit,
      assemble_encrypt(kRow1Plain, kRow1Key, KeyMode::kClassicalKey, swap_mode)
          .circuit,
      assemble_encrypt(kRow1Plain, kRow1Key, KeyMode::kClassicalKey, sharing)
          .circuit,
  };

  std::mt19937 rng(0xf00d);
  for (int round = 0; round < 100; ++round) {
    const std::uint32_t nq = 2 + rng() % 7;
    const std::uint32_t nc = rng() % 5;
    Circuit c(nq, nc, round % 3 == 0 ? "fuzz " + std::to_string(round) : "");
    const std::uint32_t gates = rng() % 41;
    std::vector<std::uint32_t> picks(nq);
    std::iota(picks.begin(), picks.end(), 0);
    for (std::uint32_t g = 0; g < gates; ++g) {
      std::shuffle(picks.begin(), picks.end(), rng);
      switch (rng() % 7) {
        case 0: c.x(picks[0]); break;
        case 1: c.cnot(picks[0], picks[1]); break;
        case 2:
          if (nq >= 3) c.toffoli(picks[0], picks[1], picks[2]);
          break;
        case 3: {
          const std::uint32_t controls = 1 + rng() % (nq - 1);
          c.mcx({picks.begin(), picks.begin() + controls}, picks[controls]);
          break;
        }
        case 4: c.swap(picks[0], picks[1]); break;
        case 5: c.reset(picks[0]); break;
        default:
          if (nc > 0)
            c.measure(picks[0], rng() % nc);
          else
            c.x(picks[0]);
      }
    }
    circuits.push_back(std::move(c));
  }

  std::size_t index = 0;
  for (const Circuit& c : circuits) {
    if (parse_text(export_text(c)) != c)
      o.fail("roundtrip broke circuit " + std::to_string(index) +
             (c.label().empty() ? "" : " (" + c.label() + ")"));
    ++index;
  }

  const Assembly first = assemble_encrypt(kRow1Plain, kRow1Key);
  const Assembly second = assemble_encrypt(kRow1Plain, kRow1Key);
  if (export_text(first.circuit) != export_text(second.circuit) ||
      export_qasm(first.circuit) != export_qasm(second.circuit) ||
      export_script(first.circuit) != export_script(second.circuit))
    o.fail("repeated assembly exports differ");
  o.note(std::to_string(circuits.size()) + " circuits");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"test vector row 1, classical and circuit traces", criterion_1},
      {"test vector rows 2 and 3", criterion_2},
      {"ANF equations and Moebius involution", criterion_3},
      {"exhaustive block equivalence", criterion_4},
      {"full-cipher equivalence", criterion_5},
      {"qubit budgets", criterion_6},
      {"cost arithmetic", criterion_7},
      {"substitution census and sharing pass", criterion_8},
      {"reset hygiene and clean-read lint", criterion_9},
      {"serialization roundtrip and determinism", criterion_10},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << (i + 1 < 10 ? " " : "") << i + 1 << ": "
              << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  std::cout << "acceptance: " << criteria.size() - failures << "/"
            << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
