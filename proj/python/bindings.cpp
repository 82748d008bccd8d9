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

// Python bindings for the main operations: the classical cipher, ANF
// derivation, circuit synthesis, basis-state simulation, serialization,
// and resource/Grover accounting. Blocks cross the boundary as the
// "b15..b0 per nibble" strings the CLI uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "qminiaes/anf.hpp"
#include "qminiaes/circuit.hpp"
#include "qminiaes/cost.hpp"
#include "qminiaes/emit.hpp"
#include "qminiaes/miniaes.hpp"
#include "qminiaes/sim.hpp"
#include "qminiaes/synth.hpp"

namespace py = pybind11;
using namespace qminiaes;

namespace {

py::dict trace_dict(const EncryptionTrace& t) {
  py::dict d;
  d["plaintext"] = t.plaintext.to_string();
  d["key"] = t.key.to_string();
  d["sbox1"] = t.after_sbox1.to_string();
  d["permutations1"] = t.after_permutations1.to_string();
  d["sbox2"] = t.after_sbox2.to_string();
  d["cipher"] = t.cipher.to_string();
  return d;
}

std::string bits_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

py::dict counts_dict(const GateCounts& g) {
  py::dict d;
  d["x"] = g.x;
  d["cnot"] = g.cnot;
  d["toffoli"] = g.toffoli;
  d["mcx"] = g.mcx;
  d["swap"] = g.swap;
  d["reset"] = g.reset;
  d["measure"] = g.measure;
  return d;
}

py::dict grover_dict(const GroverEstimate& e) {
  py::dict d;
  d["key_bits"] = e.key_bits;
  d["iterations_real"] = e.iterations_real;
  d["iterations"] = e.iterations;
  d["dag_depth"] = e.dag_depth;
  d["cnot_equivalent"] = e.cnot_equivalent;
  d["not_count"] = e.not_count;
  d["depth_cost"] = e.depth_cost;
  d["t_count_cost"] = e.t_count_cost;
  d["qubit_cost_published_formula"] = e.qubit_cost_published_formula;
  d["oracle_qubits"] = e.oracle_qubits;
  return d;
}

Circuit synthesize_target(const std::string& target,
                          const std::optional<std::string>& key,
                          const std::optional<std::string>& plaintext,
                          const std::optional<std::string>& cipher,
                          const std::string& key_mode, bool share_subproducts,
                          bool swap_relocation, py::dict* plan_out) {
  SynthOptions opt;
  opt.share_subproducts = share_subproducts;
  opt.relocation = swap_relocation ? RelocationStyle::kSwap
                                   : RelocationStyle::kCnotCopy;

  if (target == "sbox") return synth_sbox_circuit(false, opt);
  if (target == "inv-sbox") return synth_sbox_circuit(true, opt);
  if (target == "mul2") return synth_mul2_circuit();
  if (target == "mul3") return synth_mul3_circuit();
  if (target == "mixcolumn") return synth_mix_column_circuit(opt);
  if (target == "shiftrow") return synth_shift_row_circuit();

  if (target != "round1" && target != "encrypt" && target != "decrypt") {
    throw std::invalid_argument("unknown target '" + target + "'");
  }
  if (!key) throw std::invalid_argument("target '" + target + "' needs key=");
  const Block k = Block::parse(*key);
  const KeyMode mode = key_mode == "register" ? KeyMode::kKeyRegister
                                              : KeyMode::kClassicalKey;
  std::optional<Block> input;
  if (plaintext) input = Block::parse(*plaintext);
  if (cipher) input = Block::parse(*cipher);

  Assembly a = target == "encrypt"   ? assemble_encrypt(input, k, mode, opt)
               : target == "decrypt" ? assemble_decrypt(input, k, mode, opt)
                                     : assemble_round1(input, k, mode, opt);
  if (plan_out) {
    py::dict plan;
    plan["mode"] = a.plan.mode == KeyMode::kKeyRegister ? "key_register"
                                                        : "classical_key";
    plan["total_qubits"] = a.plan.total_qubits;
    plan["high_water_mark"] = a.plan.high_water_mark;
    plan["round1_high_water_mark"] = a.plan.round1_high_water_mark;
    py::list stages;
    for (const AssemblyStage& s : a.plan.stages) {
      py::dict stage;
      stage["name"] = s.name;
      stage["live_qubits"] = s.live_qubits;
      stage["gate_end"] = s.gate_end;
      py::list state;
      for (std::uint32_t q : s.state) state.append(q);
      stage["state"] = state;
      stages.append(stage);
    }
    plan["stages"] = stages;
    *plan_out = plan;
  }
  return std::move(a.circuit);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mini-AES reversible-circuit compiler, simulator and Grover "
            "cost estimator";

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("qubit_count", &Circuit::qubit_count)
      .def_property_readonly("clbit_count", &Circuit::clbit_count)
      .def_property_readonly("label", &Circuit::label)
      .def("__len__", &Circuit::size)
      .def("__eq__",
           [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("to_text", &export_text)
      .def("to_qasm", &export_qasm)
      .def("to_qiskit_script",
           [](const Circuit& c) { return export_script(c); })
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit '" + c.label() + "' qubits=" +
               std::to_string(c.qubit_count()) + " gates=" +
               std::to_string(c.size()) + ">";
      });

  m.def(
      "encrypt",
      [](const std::string& p, const std::string& k) {
        return encrypt(Block::parse(p), Block::parse(k)).cipher.to_string();
      },
      py::arg("plaintext"), py::arg("key"),
      "Two-round encryption of a 16-bit block; blocks are "
      "\"xxxx xxxx xxxx xxxx\" strings");

  m.def(
      "encrypt_trace",
      [](const std::string& p, const std::string& k) {
        return trace_dict(encrypt(Block::parse(p), Block::parse(k)));
      },
      py::arg("plaintext"), py::arg("key"),
      "Full round trace: plaintext, key, sbox1, permutations1, sbox2, "
      "cipher");

  m.def(
      "decrypt",
      [](const std::string& c, const std::string& k) {
        return decrypt(Block::parse(c), Block::parse(k)).to_string();
      },
      py::arg("cipher"), py::arg("key"));

  m.def(
      "sbox_equations",
      [](bool inverse) {
        return system_to_strings(derive_anf_system(
            inverse ? inv_sbox_truth_table() : sbox_truth_table()));
      },
      py::arg("inverse") = false,
      "Algebraic normal form of the S-box, one equation per output bit");

  m.def(
      "synthesize",
      [](const std::string& target, const std::optional<std::string>& key,
         const std::optional<std::string>& plaintext,
         const std::optional<std::string>& cipher, const std::string& key_mode,
         bool share_subproducts, bool swap_relocation) {
        return synthesize_target(target, key, plaintext, cipher, key_mode,
                                 share_subproducts, swap_relocation, nullptr);
      },
      py::arg("target"), py::arg("key") = std::nullopt,
      py::arg("plaintext") = std::nullopt, py::arg("cipher") = std::nullopt,
      py::arg("key_mode") = "classical", py::arg("share_subproducts") = false,
      py::arg("swap_relocation") = false,
      "Synthesize sbox | inv-sbox | mul2 | mul3 | mixcolumn | shiftrow | "
      "round1 | encrypt | decrypt");

  m.def(
      "synthesize_with_plan",
      [](const std::string& target, const std::optional<std::string>& key,
         const std::optional<std::string>& plaintext,
         const std::optional<std::string>& cipher, const std::string& key_mode,
         bool share_subproducts, bool swap_relocation) {
        py::dict plan;
        Circuit c =
            synthesize_target(target, key, plaintext, cipher, key_mode,
                              share_subproducts, swap_relocation, &plan);
        return py::make_tuple(std::move(c), plan);
      },
      py::arg("target"), py::arg("key") = std::nullopt,
      py::arg("plaintext") = std::nullopt, py::arg("cipher") = std::nullopt,
      py::arg("key_mode") = "classical", py::arg("share_subproducts") = false,
      py::arg("swap_relocation") = false,
      "Like synthesize, but returns (circuit, assembly plan dict); the plan "
      "is only meaningful for round1/encrypt/decrypt");

  m.def("parse_circuit", &parse_text, py::arg("text"),
        "Parse the canonical circuit text format");

  m.def(
      "simulate",
      [](const Circuit& c, const std::optional<std::string>& input) {
        BasisState s = BasisState::zeros(c);
        if (input) {
          std::size_t i = 0;
          for (char ch : *input) {
            if (ch == ' ' || ch == '_') continue;
            if ((ch != '0' && ch != '1') || i >= s.bits.size()) {
              throw std::invalid_argument(
                  "input must be a bit string with one bit per qubit");
            }
            s.bits[i++] = ch == '1';
          }
          if (i != s.bits.size()) {
            throw std::invalid_argument(
                "input must be a bit string with one bit per qubit");
          }
        }
        const BasisState out = run_basis(c, s);
        py::dict d;
        d["qubits"] = bits_string(out.bits);
        d["clbits"] = bits_string(out.classical_bits);
        return d;
      },
      py::arg("circuit"), py::arg("input") = std::nullopt,
      "Run on a basis state (bit i of input is qubit i; default all "
      "zeros); returns final qubit bits and measured classical bits");

  m.def(
      "resources",
      [](const Circuit& c) {
        const ResourceReport r = histogram(c);
        py::dict d;
        d["label"] = c.label();
        d["qubit_count"] = r.qubit_count;
        d["clbit_count"] = r.clbit_count;
        d["counts"] = counts_dict(r.counts);
        d["total_gates"] = r.total_gates;
        d["dag_depth"] = r.dag_depth;
        d["cnot_equivalent"] = cnot_equivalent(r);
        return d;
      },
      py::arg("circuit"),
      "Gate census, DAG depth and CNOT-equivalent cost (SWAP=3, Toffoli=6)");

  m.def(
      "grover_cost",
      [](unsigned key_bits, std::uint64_t cnot_equivalent_value,
         std::uint64_t not_count, std::uint64_t depth, std::uint32_t qubits) {
        return grover_dict(grover_from_costs(key_bits, cnot_equivalent_value,
                                             not_count, depth, qubits));
      },
      py::arg("key_bits"), py::arg("cnot_equivalent"), py::arg("not_count"),
      py::arg("depth"), py::arg("qubits"),
      "Key-search cost from explicit oracle numbers");

  m.def(
      "grover_cost_of",
      [](const Circuit& c, unsigned key_bits) {
        const ResourceReport r = histogram(c);
        return grover_dict(grover_estimate(r, key_bits, r.counts.x));
      },
      py::arg("circuit"), py::arg("key_bits") = 16,
      "Key-search cost with the circuit itself as the oracle");
}
