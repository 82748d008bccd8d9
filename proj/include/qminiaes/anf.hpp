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

// Vector Boolean function as an output list indexed by input value.
struct TruthTable {
  unsigned input_bits = 0;              // n in 1..8
  unsigned output_bits = 0;             // m in 1..8
  std::vector<std::uint16_t> outputs;   // 2^n entries, each < 2^m

  // Throws std::invalid_argument on any shape violation.
  void validate() const;
};

// Variable mask: bit i set means x_i is a factor; 0 is the constant-1 term.
using AnfMonomial = std::uint16_t;

// XOR of monomials. The monomial list is kept sorted and duplicate-free;
// toggling an existing monomial removes it (XOR cancellation).
struct AnfPolynomial {
  std::vector<AnfMonomial> monomials;

  bool contains(AnfMonomial m) const;
  void toggle(AnfMonomial m);
  unsigned degree() const;  // max popcount over monomials; 0 if none
};

// One polynomial per output bit, bit 0 (LSB) first.
struct AnfSystem {
  unsigned input_bits = 0;
  std::vector<AnfPolynomial> polys;
};

// Bit `bit` of every output, in input order.
std::vector<std::uint8_t> component_function(const TruthTable& t,
                                             unsigned bit);

// Binary Moebius transform (in-place butterfly), self-inverse. The input
// length must be a power of two; throws std::invalid_argument otherwise.
std::vector<std::uint8_t> moebius_transform(std::vector<std::uint8_t> f);

AnfSystem derive_anf_system(const TruthTable& t);

int evaluate_anf(const AnfPolynomial& poly, std::uint16_t input);
std::uint16_t evaluate_system(const AnfSystem& s, std::uint16_t input);

unsigned algebraic_degree(const AnfSystem& s);

// Deterministic rendering: monomials in ascending mask order, variables in
// ascending index order, e.g. "1 ^ x0 ^ x0x2". The zero polynomial is "0".
std::string monomial_to_string(AnfMonomial m);
std::string poly_to_string(const AnfPolynomial& poly);
std::vector<std::string> system_to_strings(const AnfSystem& s);

// Built-in tables for the cipher's S-box pair.
TruthTable sbox_truth_table();
TruthTable inv_sbox_truth_table();

// Table file format: either one "<input-bits> <output-bits>" line per entry
// (each input exactly once, any order), or a single line of 2^n hex digits
// (4 output bits per entry). '#' starts a comment. Throws
// std::invalid_argument naming the offending line.
TruthTable parse_truth_table(const std::string& text);

bool is_bijective(const TruthTable& t);

}  // namespace qminiaes
