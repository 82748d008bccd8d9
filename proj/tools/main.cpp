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

// qminiaes: encrypt/decrypt Mini-AES blocks, derive S-box equations,
// synthesize reversible circuits, simulate them, and price a Grover key
// search. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qminiaes/anf.hpp"
#include "qminiaes/circuit.hpp"
#include "qminiaes/cost.hpp"
#include "qminiaes/emit.hpp"
#include "qminiaes/miniaes.hpp"
#include "qminiaes/sim.hpp"
#include "qminiaes/synth.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qminiaes;

// Bad arguments and unreadable files; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Block parse_block_arg(const std::string& text, const char* flag) {
  try {
    return Block::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Circuit load_circuit(const std::string& path) {
  return parse_text(read_file(path));
}

// --out wins; otherwise QMINIAES_OUT_DIR provides a directory for the
// default file name; otherwise empty means stdout.
std::string resolve_out(const std::string& out, const std::string& fallback) {
  if (!out.empty()) return out;
  if (const char* dir = std::getenv("QMINIAES_OUT_DIR"); dir && *dir) {
    return std::string(dir) + "/" + fallback;
  }
  return {};
}

void deliver(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_file(path, text);
    std::cerr << "wrote " << path << "\n";
  }
}

json counts_to_json(const GateCounts& g) {
  return json{{"x", g.x},       {"cnot", g.cnot},   {"toffoli", g.toffoli},
              {"mcx", g.mcx},   {"swap", g.swap},   {"reset", g.reset},
              {"measure", g.measure}};
}

json weights_to_json(const CostWeights& w) {
  json j{{"swap_weight", w.swap_weight}, {"toffoli_weight", w.toffoli_weight}};
  j["mcx_weight"] = w.mcx_weight ? json(*w.mcx_weight) : json(nullptr);
  return j;
}

json published_to_json(const PublishedCounts& row) {
  auto cell = [](std::int64_t v) { return v < 0 ? json(nullptr) : json(v); };
  json j;
  j["stage"] = row.stage;
  j["qubits"] = cell(row.qubits);
  j["cnot"] = cell(row.cnot);
  j["toffoli"] = cell(row.toffoli);
  j["x"] = cell(row.x);
  j["reset"] = cell(row.reset);
  j["swap"] = cell(row.swap);
  j["depth"] = cell(row.depth);
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

json trace_to_json(const EncryptionTrace& t) {
  return json{{"plaintext", t.plaintext.to_string()},
              {"key", t.key.to_string()},
              {"sbox1", t.after_sbox1.to_string()},
              {"permutations1", t.after_permutations1.to_string()},
              {"sbox2", t.after_sbox2.to_string()},
              {"cipher", t.cipher.to_string()}};
}

// Options shared by every subcommand that can build a circuit in-process.
struct TargetOptions {
  std::string target;
  std::string plaintext;
  std::string cipher;
  std::string key;
  std::string key_mode = "classical";
  bool share_subproducts = false;
  bool swap_relocation = false;
};

void add_target_options(CLI::App* sub, TargetOptions& t) {
  sub->add_option("--target", t.target,
                  "What to synthesize: sbox | inv-sbox | mul2 | mul3 | "
                  "mixcolumn | round1 | encrypt | decrypt")
      ->check(CLI::IsMember({"sbox", "inv-sbox", "mul2", "mul3", "mixcolumn",
                             "round1", "encrypt", "decrypt"}));
  sub->add_option("--plaintext", t.plaintext,
                  "16-bit block loaded by the circuit (encrypt/round1); omit "
                  "for a caller-prepared input register");
  sub->add_option("--cipher", t.cipher,
                  "16-bit block loaded by the circuit (decrypt); omit for a "
                  "caller-prepared input register");
  sub->add_option("--key", t.key, "16-bit key (required for assemblies)");
  sub->add_option("--key-mode", t.key_mode,
                  "classical: key folded into X gates; register: key held in "
                  "16 extra qubits")
      ->check(CLI::IsMember({"classical", "register"}));
  sub->add_flag("--share-subproducts", t.share_subproducts,
                "Factor shared quadratic sub-products to cut Toffoli count");
  sub->add_flag("--swap-relocation", t.swap_relocation,
                "Relocate nibbles with SWAP gates instead of CNOT copies");
}

bool target_is_assembly(const std::string& target) {
  return target == "round1" || target == "encrypt" || target == "decrypt";
}

Circuit build_target(const TargetOptions& t, AssemblyPlan* plan_out = nullptr) {
  if (t.target.empty()) throw UsageError("--target is required");
  SynthOptions opt;
  opt.share_subproducts = t.share_subproducts;
  opt.relocation = t.swap_relocation ? RelocationStyle::kSwap
                                     : RelocationStyle::kCnotCopy;
  if (!t.cipher.empty() && t.target != "decrypt") {
    throw UsageError("--cipher only applies to target 'decrypt'");
  }
  if (!t.plaintext.empty() && t.target != "encrypt" && t.target != "round1") {
    throw UsageError("--plaintext only applies to targets 'encrypt' and "
                     "'round1'");
  }

  if (t.target == "sbox") return synth_sbox_circuit(false, opt);
  if (t.target == "inv-sbox") return synth_sbox_circuit(true, opt);
  if (t.target == "mul2") return synth_mul2_circuit();
  if (t.target == "mul3") return synth_mul3_circuit();
  if (t.target == "mixcolumn") return synth_mix_column_circuit(opt);

  if (t.key.empty()) {
    throw UsageError("--key is required for target '" + t.target + "'");
  }
  const Block key = parse_block_arg(t.key, "--key");
  const KeyMode mode = t.key_mode == "register" ? KeyMode::kKeyRegister
                                                : KeyMode::kClassicalKey;
  std::optional<Block> input;
  if (!t.plaintext.empty()) input = parse_block_arg(t.plaintext, "--plaintext");
  if (!t.cipher.empty()) input = parse_block_arg(t.cipher, "--cipher");

  Assembly a = t.target == "encrypt"   ? assemble_encrypt(input, key, mode, opt)
               : t.target == "decrypt" ? assemble_decrypt(input, key, mode, opt)
                                       : assemble_round1(input, key, mode, opt);
  if (plan_out) *plan_out = a.plan;
  return std::move(a.circuit);
}

json plan_to_json(const AssemblyPlan& plan) {
  json stages = json::array();
  for (const AssemblyStage& s : plan.stages) {
    json state = json::array();
    for (std::uint32_t q : s.state) state.push_back(q);
    stages.push_back(json{{"name", s.name},
                          {"live_qubits", s.live_qubits},
                          {"gate_end", s.gate_end},
                          {"state", state}});
  }
  return json{{"mode", plan.mode == KeyMode::kKeyRegister ? "key_register"
                                                          : "classical_key"},
              {"total_qubits", plan.total_qubits},
              {"high_water_mark", plan.high_water_mark},
              {"round1_high_water_mark", plan.round1_high_water_mark},
              {"stages", stages}};
}

// The published table rows to show next to a freshly counted circuit.
const PublishedCounts* comparison_row(const std::string& label) {
  if (label == "encrypt" || label == "decrypt") {
    return published_reference_for("round2");
  }
  if (label == "round1") return published_reference_for("round1");
  if (label == "sbox" || label == "inv-sbox") {
    return published_reference_for("first_sbox");
  }
  return nullptr;
}

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// Accepts a 0/1 string with optional spaces or underscores; char i is the
// initial value of qubit i.
std::vector<std::uint8_t> parse_bits_arg(const std::string& text,
                                         std::size_t expected,
                                         const char* flag) {
  std::vector<std::uint8_t> bits;
  for (char ch : text) {
    if (ch == ' ' || ch == '_') continue;
    if (ch != '0' && ch != '1') {
      throw UsageError(std::string(flag) + ": expected a bit string, got '" +
                       text + "'");
    }
    bits.push_back(ch == '1');
  }
  if (bits.size() != expected) {
    throw UsageError(std::string(flag) + ": expected " +
                     std::to_string(expected) + " bits, got " +
                     std::to_string(bits.size()));
  }
  return bits;
}

BasisState state_with_block(const Circuit& c, const StateMap& map,
                            const Block& b) {
  BasisState s = BasisState::zeros(c);
  for (std::size_t n = 0; n < 4; ++n) {
    for (unsigned j = 0; j < 4; ++j) {
      s.bits[map[4 * n + j]] = std::uint8_t(b.bit(n, j));
    }
  }
  return s;
}

Block block_from_bits(const std::vector<std::uint8_t>& bits,
                      const StateMap& map) {
  Block b;
  for (std::size_t n = 0; n < 4; ++n) {
    for (unsigned j = 0; j < 4; ++j) {
      b[n] = Nibble(b[n] | (bits[map[4 * n + j]] << j));
    }
  }
  return b;
}

Block block_from_clbits(const std::vector<std::uint8_t>& cl) {
  Block b;
  for (std::size_t n = 0; n < 4; ++n) {
    for (unsigned j = 0; j < 4; ++j) {
      b[n] = Nibble(b[n] | (cl[4 * n + j] << j));
    }
  }
  return b;
}

struct VerifyOutcome {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void fail(const std::string& detail) {
    if (failures == 0) first_failure = detail;
    ++failures;
  }
};

VerifyOutcome verify_tables() {
  VerifyOutcome out;
  const struct {
    bool inverse;
    TruthTable table;
  } jobs[] = {{false, sbox_truth_table()}, {true, inv_sbox_truth_table()}};
  for (const auto& job : jobs) {
    const Circuit c = synth_sbox_circuit(job.inverse);
    const CheckReport r =
        exhaustive_check(c, {0, 1, 2, 3}, job.table, {6, 7, 8, 9});
    out.checks += r.checks;
    for (const Mismatch& m : r.mismatches) {
      out.fail("input " + std::to_string(m.input) + ": expected " +
               std::to_string(m.expected) + ", got " +
               std::to_string(m.actual));
    }
  }
  return out;
}

VerifyOutcome verify_mul() {
  VerifyOutcome out;
  for (const unsigned factor : {2u, 3u}) {
    TruthTable t;
    t.input_bits = 4;
    t.output_bits = 4;
    for (std::uint16_t v = 0; v < 16; ++v) {
      t.outputs.push_back(gf16_mul(Nibble(factor), Nibble(v)));
    }
    const Circuit c = factor == 2 ? synth_mul2_circuit() : synth_mul3_circuit();
    const CheckReport r =
        exhaustive_check(c, {0, 1, 2, 3}, t, {4, 5, 6, 7});
    out.checks += r.checks;
    for (const Mismatch& m : r.mismatches) {
      out.fail("mul" + std::to_string(factor) + " input " +
               std::to_string(m.input));
    }
  }
  return out;
}

VerifyOutcome verify_mixcolumn(bool exhaustive, std::uint64_t samples,
                               std::uint32_t seed) {
  VerifyOutcome out;
  const Circuit c = synth_mix_column_circuit();
  std::mt19937 rng(seed);
  const std::uint64_t total = exhaustive ? 65536 : samples;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Block in = exhaustive ? Block::from_value(std::uint16_t(i))
                                : Block::from_value(std::uint16_t(rng()));
    const BasisState run =
        run_basis(c, state_with_block(c, canonical_state_map(), in));
    ++out.checks;
    if (block_from_bits(run.bits, canonical_state_map()) != mix_column(in)) {
      out.fail("input " + in.to_string());
    }
  }
  return out;
}

VerifyOutcome verify_cipher(bool decrypt_mode, bool sweep_inputs,
                            const std::string& key_text, std::uint64_t samples,
                            std::uint32_t seed) {
  VerifyOutcome out;
  if (sweep_inputs) {
    if (key_text.empty()) {
      throw UsageError("--exhaustive-plaintexts needs --key");
    }
    const Block key = parse_block_arg(key_text, "--key");
    const Assembly a = decrypt_mode
                           ? assemble_decrypt(std::nullopt, key)
                           : assemble_encrypt(std::nullopt, key);
    for (std::uint32_t v = 0; v < 65536; ++v) {
      const Block in = Block::from_value(std::uint16_t(v));
      const BasisState run = run_basis(
          a.circuit, state_with_block(a.circuit, canonical_state_map(), in));
      const Block got = block_from_clbits(run.classical_bits);
      const Block want =
          decrypt_mode ? decrypt(in, key) : encrypt(in, key).cipher;
      ++out.checks;
      if (got != want) out.fail("input " + in.to_string());
    }
    return out;
  }

  std::mt19937 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Block p = Block::from_value(std::uint16_t(rng()));
    const Block k = Block::from_value(std::uint16_t(rng()));
    ++out.checks;
    if (decrypt_mode) {
      const Block c = encrypt(p, k).cipher;
      const Assembly a = assemble_decrypt(c, k);
      const BasisState run = run_basis(a.circuit, BasisState::zeros(a.circuit));
      if (block_from_clbits(run.classical_bits) != p) {
        out.fail("plaintext " + p.to_string() + " key " + k.to_string());
      }
    } else {
      const Assembly a = assemble_encrypt(p, k);
      const BasisState run = run_basis(a.circuit, BasisState::zeros(a.circuit));
      if (block_from_clbits(run.classical_bits) != encrypt(p, k).cipher) {
        out.fail("plaintext " + p.to_string() + " key " + k.to_string());
      }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mini-AES reversible-circuit compiler, simulator and Grover "
               "cost estimator"};
  app.require_subcommand(1);
  int rc = 0;

  // encrypt / decrypt ------------------------------------------------------
  struct {
    std::string plaintext, cipher, key;
    bool trace = false;
    bool js = false;
  } enc, dec;

  CLI::App* cmd_enc =
      app.add_subcommand("encrypt", "Encrypt a 16-bit block (two rounds)");
  cmd_enc->add_option("--plaintext", enc.plaintext, "16 bits, e.g. \"1001 1100 0110 0011\"")
      ->required();
  cmd_enc->add_option("--key", enc.key, "16-bit key")->required();
  cmd_enc->add_flag("--trace", enc.trace, "Emit the full round trace as JSON");
  cmd_enc->add_flag("--json", enc.js, "JSON output");
  cmd_enc->callback([&] {
    const Block p = parse_block_arg(enc.plaintext, "--plaintext");
    const Block k = parse_block_arg(enc.key, "--key");
    const EncryptionTrace t = encrypt(p, k);
    if (enc.trace || enc.js) {
      std::cout << trace_to_json(t).dump(2) << "\n";
    } else {
      std::cout << t.cipher.to_string() << "\n";
    }
  });

  CLI::App* cmd_dec =
      app.add_subcommand("decrypt", "Decrypt a 16-bit block (two rounds)");
  cmd_dec->add_option("--cipher", dec.cipher, "16-bit block")->required();
  cmd_dec->add_option("--key", dec.key, "16-bit key")->required();
  cmd_dec->add_flag("--trace", dec.trace,
                    "Emit the forward trace of the recovered plaintext");
  cmd_dec->add_flag("--json", dec.js, "JSON output");
  cmd_dec->callback([&] {
    const Block c = parse_block_arg(dec.cipher, "--cipher");
    const Block k = parse_block_arg(dec.key, "--key");
    const Block p = decrypt(c, k);
    if (dec.trace || dec.js) {
      std::cout << trace_to_json(encrypt(p, k)).dump(2) << "\n";
    } else {
      std::cout << p.to_string() << "\n";
    }
  });

  // anf ---------------------------------------------------------------------
  struct {
    std::string source = "builtin:forward";
    bool js = false;
  } anf;
  CLI::App* cmd_anf = app.add_subcommand(
      "anf", "Derive algebraic normal form equations from a truth table");
  cmd_anf->add_option("--sbox", anf.source,
                      "builtin:forward | builtin:inverse | path to a table "
                      "file (one hex digit per entry, or one "
                      "\"<input-bits> <output-bits>\" pair per line)");
  cmd_anf->add_flag("--json", anf.js, "JSON output");
  cmd_anf->callback([&] {
    TruthTable table;
    if (anf.source == "builtin:forward") {
      table = sbox_truth_table();
    } else if (anf.source == "builtin:inverse") {
      table = inv_sbox_truth_table();
    } else {
      try {
        table = parse_truth_table(read_file(anf.source));
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError("--sbox: " + std::string(e.what()));
      }
    }
    const bool bijective = is_bijective(table);
    if (!bijective) {
      std::cerr << "warning: table is not a bijection; the equations "
                   "describe a non-invertible map\n";
    }
    const AnfSystem system = derive_anf_system(table);
    const std::vector<std::string> lines = system_to_strings(system);
    if (anf.js) {
      json j{{"input_bits", system.input_bits},
             {"output_bits", table.output_bits},
             {"bijective", bijective},
             {"degree", algebraic_degree(system)},
             {"equations", lines}};
      std::cout << j.dump(2) << "\n";
    } else {
      for (const std::string& line : lines) std::cout << line << "\n";
    }
  });

  // verify --------------------------------------------------------------
  struct {
    std::string mode;
    std::string key;
    bool exhaustive = false;
    bool sweep_inputs = false;
    std::uint64_t samples = 100;
    std::uint32_t seed = 0;
    bool js = false;
  } ver;
  CLI::App* cmd_ver = app.add_subcommand(
      "verify", "Check synthesized circuits against the classical reference");
  cmd_ver->add_option("--mode", ver.mode, "sbox | mul | mixcolumn | encrypt | decrypt")
      ->required()
      ->check(CLI::IsMember({"sbox", "mul", "mixcolumn", "encrypt", "decrypt"}));
  cmd_ver->add_flag("--exhaustive", ver.exhaustive,
                    "Sweep the whole input space where feasible");
  cmd_ver->add_flag("--exhaustive-plaintexts", ver.sweep_inputs,
                    "encrypt/decrypt: sweep all 65536 blocks under --key");
  cmd_ver->add_option("--samples", ver.samples, "Randomized check count");
  cmd_ver->add_option("--seed", ver.seed, "Seed for randomized checks");
  cmd_ver->add_option("--key", ver.key, "Fixed key for the input sweep");
  cmd_ver->add_flag("--json", ver.js, "JSON output");
  cmd_ver->callback([&] {
    VerifyOutcome out;
    if (ver.mode == "sbox") {
      out = verify_tables();
    } else if (ver.mode == "mul") {
      out = verify_mul();
    } else if (ver.mode == "mixcolumn") {
      out = verify_mixcolumn(ver.exhaustive, ver.samples, ver.seed);
    } else {
      out = verify_cipher(ver.mode == "decrypt", ver.sweep_inputs, ver.key,
                          ver.samples, ver.seed);
    }
    const bool passed = out.failures == 0;
    if (ver.js) {
      json j{{"mode", ver.mode},
             {"checks", out.checks},
             {"failures", out.failures},
             {"passed", passed},
             {"seed", ver.seed}};
      if (!passed) j["first_failure"] = out.first_failure;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "verify " << ver.mode << ": " << (out.checks - out.failures)
                << "/" << out.checks << " checks passed\n";
      if (!passed) std::cout << "first failure: " << out.first_failure << "\n";
    }
    if (!passed) rc = 1;
  });

  // synth -----------------------------------------------------------------
  struct {
    TargetOptions target;
    std::string out;
    bool js = false;
  } syn;
  CLI::App* cmd_syn = app.add_subcommand(
      "synth", "Synthesize a reversible circuit and write canonical text");
  add_target_options(cmd_syn, syn.target);
  cmd_syn->add_option("--out", syn.out,
                      "Output path (default: $QMINIAES_OUT_DIR/<target>.txt "
                      "or stdout)");
  cmd_syn->add_flag("--json", syn.js, "Print a JSON synthesis summary");
  cmd_syn->callback([&] {
    AssemblyPlan plan;
    const bool assembly = target_is_assembly(syn.target.target);
    const Circuit c = build_target(syn.target, &plan);
    const std::string text = export_text(c);
    const std::string path =
        resolve_out(syn.out, syn.target.target + ".txt");
    if (syn.js) {
      const ResourceReport r = histogram(c);
      json j{{"target", syn.target.target},
             {"qubit_count", c.qubit_count()},
             {"clbit_count", c.clbit_count()},
             {"gate_count", c.size()},
             {"counts", counts_to_json(r.counts)},
             {"dag_depth", r.dag_depth}};
      j["plan"] = assembly ? plan_to_json(plan) : json(nullptr);
      if (path.empty()) {
        j["output"] = nullptr;
        j["circuit"] = text;
      } else {
        j["output"] = path;
        write_file(path, text);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      deliver(text, path);
    }
  });

  // simulate ----------------------------------------------------------------
  struct {
    std::string circuit;
    std::string input;
    bool js = false;
  } simo;
  CLI::App* cmd_sim = app.add_subcommand(
      "simulate", "Run a circuit file on a basis state (bit i of --input is "
                  "qubit i; default all zeros)");
  cmd_sim->add_option("--circuit", simo.circuit, "Canonical circuit text file")
      ->required();
  cmd_sim->add_option("--input", simo.input, "Initial qubit bit string");
  cmd_sim->add_flag("--json", simo.js, "JSON output");
  cmd_sim->callback([&] {
    const Circuit c = load_circuit(simo.circuit);
    BasisState s = BasisState::zeros(c);
    if (!simo.input.empty()) {
      s.bits = parse_bits_arg(simo.input, c.qubit_count(), "--input");
    }
    const BasisState out = run_basis(c, s);
    if (simo.js) {
      json j{{"qubits", bits_to_string(out.bits)},
             {"clbits", bits_to_string(out.classical_bits)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "qubits: " << bits_to_string(out.bits) << "\n";
      std::cout << "clbits: " << bits_to_string(out.classical_bits) << "\n";
    }
  });

  // resources ---------------------------------------------------------------
  struct {
    std::string circuit;
    TargetOptions target;
    std::string compare;
    std::uint64_t swap_weight = 3;
    std::uint64_t toffoli_weight = 6;
    std::int64_t mcx_weight = -1;
    bool js = false;
  } res;
  CLI::App* cmd_res = app.add_subcommand(
      "resources", "Gate census, depth and CNOT-equivalent cost (JSON)");
  cmd_res->add_option("--circuit", res.circuit, "Canonical circuit text file");
  add_target_options(cmd_res, res.target);
  cmd_res->add_option("--compare", res.compare,
                      "Published table row to attach: first_sbox | round1 | "
                      "rearrangement | second_sbox | round2");
  cmd_res->add_option("--swap-weight", res.swap_weight, "CNOTs per SWAP");
  cmd_res->add_option("--toffoli-weight", res.toffoli_weight,
                      "CNOTs per Toffoli");
  cmd_res->add_option("--mcx-weight", res.mcx_weight,
                      "CNOTs per MCX (MCX rejected without it)");
  cmd_res->add_flag("--json", res.js, "JSON output (always on)");
  cmd_res->callback([&] {
    if (res.circuit.empty() == res.target.target.empty()) {
      throw UsageError("give exactly one of --circuit or --target");
    }
    const Circuit c = res.circuit.empty() ? build_target(res.target)
                                          : load_circuit(res.circuit);
    CostWeights w;
    w.swap_weight = res.swap_weight;
    w.toffoli_weight = res.toffoli_weight;
    if (res.mcx_weight >= 0) w.mcx_weight = std::uint64_t(res.mcx_weight);
    const ResourceReport r = histogram(c);
    json j{{"label", c.label()},
           {"qubit_count", r.qubit_count},
           {"clbit_count", r.clbit_count},
           {"counts", counts_to_json(r.counts)},
           {"total_gates", r.total_gates},
           {"dag_depth", r.dag_depth},
           {"cnot_equivalent", cnot_equivalent(r, w)},
           {"weights", weights_to_json(w)}};
    const PublishedCounts* row = nullptr;
    if (!res.compare.empty()) {
      row = published_reference_for(res.compare);
      if (!row) throw UsageError("no published row named '" + res.compare + "'");
    } else {
      row = comparison_row(c.label());
    }
    j["published_reference"] = row ? published_to_json(*row) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  });

  // grover-cost -------------------------------------------------------------
  struct {
    std::string circuit;
    TargetOptions target;
    unsigned key_bits = 16;
    std::int64_t cnot_equivalent = -1;
    std::int64_t not_count = -1;
    std::int64_t depth = -1;
    std::int64_t qubits = -1;
    std::uint64_t swap_weight = 3;
    std::uint64_t toffoli_weight = 6;
    std::int64_t mcx_weight = -1;
    bool js = false;
  } gro;
  CLI::App* cmd_gro = app.add_subcommand(
      "grover-cost", "Key-search cost of the Grover oracle (JSON)");
  cmd_gro->add_option("--circuit", gro.circuit, "Canonical circuit text file");
  add_target_options(cmd_gro, gro.target);
  cmd_gro->add_option("--key-bits", gro.key_bits, "Key length (default 16)");
  cmd_gro->add_option("--cnot-equivalent", gro.cnot_equivalent,
                      "Direct cost input instead of a circuit");
  cmd_gro->add_option("--not-count", gro.not_count,
                      "NOT gates to add on top of --cnot-equivalent");
  cmd_gro->add_option("--depth", gro.depth, "Depth for the direct-input path");
  cmd_gro->add_option("--qubits", gro.qubits,
                      "Oracle width for the direct-input path");
  cmd_gro->add_option("--swap-weight", gro.swap_weight, "CNOTs per SWAP");
  cmd_gro->add_option("--toffoli-weight", gro.toffoli_weight,
                      "CNOTs per Toffoli");
  cmd_gro->add_option("--mcx-weight", gro.mcx_weight, "CNOTs per MCX");
  cmd_gro->add_flag("--json", gro.js, "JSON output (always on)");
  cmd_gro->callback([&] {
    CostWeights w;
    w.swap_weight = gro.swap_weight;
    w.toffoli_weight = gro.toffoli_weight;
    if (gro.mcx_weight >= 0) w.mcx_weight = std::uint64_t(gro.mcx_weight);

    GroverEstimate est;
    const bool direct = gro.cnot_equivalent >= 0;
    if (direct) {
      est = grover_from_costs(
          gro.key_bits, std::uint64_t(gro.cnot_equivalent),
          gro.not_count >= 0 ? std::uint64_t(gro.not_count) : 0,
          gro.depth >= 0 ? std::uint64_t(gro.depth) : 0,
          gro.qubits >= 0 ? std::uint32_t(gro.qubits) : 0);
    } else {
      if (gro.circuit.empty() == gro.target.target.empty()) {
        throw UsageError(
            "give one of --circuit, --target, or --cnot-equivalent");
      }
      const Circuit c = gro.circuit.empty() ? build_target(gro.target)
                                            : load_circuit(gro.circuit);
      const ResourceReport r = histogram(c);
      est = grover_estimate(r, gro.key_bits, r.counts.x, w);
    }
    json j{{"key_bits", est.key_bits},
           {"iterations_real", est.iterations_real},
           {"iterations", est.iterations},
           {"dag_depth", est.dag_depth},
           {"cnot_equivalent", est.cnot_equivalent},
           {"not_count", est.not_count},
           {"depth_cost", est.depth_cost},
           {"t_count_cost", est.t_count_cost},
           {"qubit_cost_published_formula", est.qubit_cost_published_formula},
           {"oracle_qubits", est.oracle_qubits},
           {"weights", weights_to_json(w)}};
    std::cout << j.dump(2) << "\n";
  });

  // export --------------------------------------------------------------
  struct {
    std::string circuit;
    std::string format = "text";
    std::string out;
  } exp;
  CLI::App* cmd_exp = app.add_subcommand(
      "export", "Re-serialize a circuit file as text, OpenQASM 3, or a "
                "Qiskit Python script");
  cmd_exp->add_option("--circuit", exp.circuit, "Canonical circuit text file")
      ->required();
  cmd_exp->add_option("--format", exp.format, "text | qasm3 | qiskit-py")
      ->check(CLI::IsMember({"text", "qasm3", "qiskit-py"}));
  cmd_exp->add_option("--out", exp.out, "Output path (default stdout)");
  cmd_exp->callback([&] {
    const Circuit c = load_circuit(exp.circuit);
    const ExportFormat format = parse_export_format(exp.format);
    const char* ext = format == ExportFormat::kQasm3      ? ".qasm"
                      : format == ExportFormat::kQiskitPy ? ".py"
                                                          : ".txt";
    std::string fallback = exp.circuit;
    if (const auto slash = fallback.find_last_of('/');
        slash != std::string::npos) {
      fallback = fallback.substr(slash + 1);
    }
    if (const auto dot = fallback.find_last_of('.');
        dot != std::string::npos) {
      fallback = fallback.substr(0, dot);
    }
    deliver(export_circuit(c, format),
            resolve_out(exp.out, fallback + ext));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
