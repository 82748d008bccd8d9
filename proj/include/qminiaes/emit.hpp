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

// Circuit serialization: the canonical text format (lossless, parseable),
// OpenQASM 3 source, and a generated Qiskit Python script. All exporters
// are deterministic; identical circuits yield byte-identical output.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qminiaes/circuit.hpp"

namespace qminiaes {

enum class ExportFormat : std::uint8_t {
  kText,
  kQasm3,
  kQiskitPy,
};

// Accepts "text", "qasm3", "qiskit-py"; throws std::invalid_argument on
// anything else so unknown formats die at option-parse time.
ExportFormat parse_export_format(std::string_view name);
const char* export_format_name(ExportFormat format);

// Raised by parse_text with the 1-based line the problem was found on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Canonical text format:
//   qubits N
//   clbits M
//   x q | cx c t | ccx c1 c2 t | mcx c1 ... ck t | swap a b | reset q |
//   measure q -> c
// "#" starts a comment; blank lines are ignored. A non-empty circuit label
// is emitted as a leading comment.
std::string export_text(const Circuit& circuit);

// Inverse of export_text: comments are skipped, except that a comment line
// before the headers restores the circuit label. Throws ParseError carrying
// a line number for malformed lines, unknown mnemonics, and out-of-range
// operands.
Circuit parse_text(const std::string& text);

// OpenQASM 3 source using only the standard gate header. A multi-controlled
// X renders as a ctrl-modified x statement.
std::string export_qasm(const Circuit& circuit);

// Self-contained Python source that rebuilds the circuit under Qiskit, one
// construction call per gate in circuit order, then prints it. The script is
// an output artifact; nothing in this project executes it.
std::string export_script(const Circuit& circuit,
                          ExportFormat format = ExportFormat::kQiskitPy);

// Dispatches to the exporter for the requested format.
std::string export_circuit(const Circuit& circuit, ExportFormat format);

}  // namespace qminiaes
