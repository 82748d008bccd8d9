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

#include "qminiaes/emit.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace qminiaes {

namespace {

// Splits a line into whitespace-separated tokens, dropping "#" comments.
std::vector<std::string_view> tokenize(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint32_t parse_index(std::string_view token, std::size_t line_no,
                          const char* what) {
  std::uint32_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("expected ") + what + ", got '" +
                                  std::string(token) + "'");
  }
  return value;
}

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
  if (name == "text") return ExportFormat::kText;
  if (name == "qasm3") return ExportFormat::kQasm3;
  if (name == "qiskit-py") return ExportFormat::kQiskitPy;
  throw std::invalid_argument("unknown export format '" + std::string(name) +
                              "' (expected text, qasm3, or qiskit-py)");
}

const char* export_format_name(ExportFormat format) {
  switch (format) {
    case ExportFormat::kText: return "text";
    case ExportFormat::kQasm3: return "qasm3";
    case ExportFormat::kQiskitPy: return "qiskit-py";
  }
  return "?";
}

std::string export_text(const Circuit& circuit) {
  std::ostringstream out;
  if (!circuit.label().empty()) out << "# " << circuit.label() << "\n";
  out << "qubits " << circuit.qubit_count() << "\n";
  out << "clbits " << circuit.clbit_count() << "\n";
  for (const Gate& g : circuit.gates()) {
    out << gate_name(g.kind);
    if (g.kind == GateKind::kMeasure) {
      out << ' ' << g.qubits[0] << " -> " << g.clbit;
    } else {
      for (std::uint32_t q : g.qubits) out << ' ' << q;
    }
    out << "\n";
  }
  return out.str();
}

Circuit parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;

  // The first two content lines fix the register sizes. A comment before
  // them restores the label export_text wrote.
  std::uint32_t counts[2] = {0, 0};
  const char* headers[2] = {"qubits", "clbits"};
  int header = 0;
  std::string label;
  Circuit circuit;

  while (std::getline(in, raw)) {
    ++line_no;
    if (header == 0 && label.empty()) {
      const auto hash = raw.find('#');
      if (hash != std::string::npos && tokenize(raw.substr(0, hash)).empty()) {
        std::size_t start = hash + 1;
        while (start < raw.size() && raw[start] == ' ') ++start;
        std::size_t end = raw.size();
        while (end > start && (raw[end - 1] == '\r' || raw[end - 1] == ' ')) {
          --end;
        }
        label = raw.substr(start, end - start);
      }
    }
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (header < 2) {
      if (tokens[0] != headers[header] || tokens.size() != 2) {
        throw ParseError(line_no, std::string("expected '") +
                                      headers[header] + " N'");
      }
      counts[header] = parse_index(tokens[1], line_no, "a register size");
      if (++header == 2) circuit = Circuit(counts[0], counts[1], label);
      continue;
    }

    Gate g;
    std::size_t operands_begin = 1;
    std::size_t operands_end = tokens.size();
    if (tokens[0] == "x") {
      g.kind = GateKind::kX;
    } else if (tokens[0] == "cx") {
      g.kind = GateKind::kCnot;
    } else if (tokens[0] == "ccx") {
      g.kind = GateKind::kToffoli;
    } else if (tokens[0] == "mcx") {
      g.kind = GateKind::kMcx;
    } else if (tokens[0] == "swap") {
      g.kind = GateKind::kSwap;
    } else if (tokens[0] == "reset") {
      g.kind = GateKind::kReset;
    } else if (tokens[0] == "measure") {
      g.kind = GateKind::kMeasure;
      if (tokens.size() != 4 || tokens[2] != "->") {
        throw ParseError(line_no, "expected 'measure q -> c'");
      }
      g.clbit = std::int32_t(parse_index(tokens[3], line_no,
                                         "a classical bit index"));
      operands_end = 2;
    } else {
      throw ParseError(line_no, "unknown gate '" + std::string(tokens[0]) +
                                    "'");
    }
    for (std::size_t i = operands_begin; i < operands_end; ++i) {
      g.qubits.push_back(parse_index(tokens[i], line_no, "a qubit index"));
    }
    try {
      circuit.append(std::move(g));
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (header < 2) {
    throw ParseError(line_no, std::string("expected '") + headers[header] +
                                  " N' before end of input");
  }
  return circuit;
}

std::string export_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  if (!circuit.label().empty()) out << "// " << circuit.label() << "\n";
  if (circuit.qubit_count() > 0) {
    out << "qubit[" << circuit.qubit_count() << "] q;\n";
  }
  if (circuit.clbit_count() > 0) {
    out << "bit[" << circuit.clbit_count() << "] c;\n";
  }
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::kX:
        out << "x q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::kCnot:
        out << "cx q[" << g.qubits[0] << "], q[" << g.qubits[1] << "];\n";
        break;
      case GateKind::kToffoli:
        out << "ccx q[" << g.qubits[0] << "], q[" << g.qubits[1] << "], q["
            << g.qubits[2] << "];\n";
        break;
      case GateKind::kMcx:
        out << "ctrl(" << (g.qubits.size() - 1) << ") @ x";
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
          out << (i == 0 ? " q[" : ", q[") << g.qubits[i] << "]";
        }
        out << ";\n";
        break;
      case GateKind::kSwap:
        out << "swap q[" << g.qubits[0] << "], q[" << g.qubits[1] << "];\n";
        break;
      case GateKind::kReset:
        out << "reset q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::kMeasure:
        out << "c[" << g.clbit << "] = measure q[" << g.qubits[0] << "];\n";
        break;
    }
  }
  return out.str();
}

std::string export_script(const Circuit& circuit, ExportFormat format) {
  if (format != ExportFormat::kQiskitPy) {
    throw std::invalid_argument(
        std::string("export_script cannot generate format '") +
        export_format_name(format) + "'");
  }
  std::ostringstream out;
  out << "#!/usr/bin/env python3\n";
  if (!circuit.label().empty()) out << "# " << circuit.label() << "\n";
  out << "from qiskit import QuantumCircuit\n";
  out << "\n";
  out << "qc = QuantumCircuit(" << circuit.qubit_count();
  if (circuit.clbit_count() > 0) out << ", " << circuit.clbit_count();
  out << ")\n";
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::kX:
        out << "qc.x(" << g.qubits[0] << ")\n";
        break;
      case GateKind::kCnot:
        out << "qc.cx(" << g.qubits[0] << ", " << g.qubits[1] << ")\n";
        break;
      case GateKind::kToffoli:
        out << "qc.ccx(" << g.qubits[0] << ", " << g.qubits[1] << ", "
            << g.qubits[2] << ")\n";
        break;
      case GateKind::kMcx: {
        out << "qc.mcx([";
        for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) {
          out << (i == 0 ? "" : ", ") << g.qubits[i];
        }
        out << "], " << g.qubits.back() << ")\n";
        break;
      }
      case GateKind::kSwap:
        out << "qc.swap(" << g.qubits[0] << ", " << g.qubits[1] << ")\n";
        break;
      case GateKind::kReset:
        out << "qc.reset(" << g.qubits[0] << ")\n";
        break;
      case GateKind::kMeasure:
        out << "qc.measure(" << g.qubits[0] << ", " << g.clbit << ")\n";
        break;
    }
  }
  out << "\n";
  out << "print(qc)\n";
  return out.str();
}

std::string export_circuit(const Circuit& circuit, ExportFormat format) {
  switch (format) {
    case ExportFormat::kText: return export_text(circuit);
    case ExportFormat::kQasm3: return export_qasm(circuit);
    case ExportFormat::kQiskitPy: return export_script(circuit);
  }
  throw std::invalid_argument("unknown export format");
}

}  // namespace qminiaes
