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

#include "qminiaes/anf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qminiaes/miniaes.hpp"

namespace qminiaes {

void TruthTable::validate() const {
  if (input_bits < 1 || input_bits > 8) {
    throw std::invalid_argument("truth table input_bits must be in 1..8");
  }
  if (output_bits < 1 || output_bits > 8) {
    throw std::invalid_argument("truth table output_bits must be in 1..8");
  }
  if (outputs.size() != (std::size_t(1) << input_bits)) {
    throw std::invalid_argument("truth table must have exactly 2^n outputs");
  }
  for (std::uint16_t v : outputs) {
    if (v >= (1u << output_bits)) {
      throw std::invalid_argument("truth table entry exceeds output width");
    }
  }
}

bool AnfPolynomial::contains(AnfMonomial m) const {
  return std::binary_search(monomials.begin(), monomials.end(), m);
}

void AnfPolynomial::toggle(AnfMonomial m) {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
  if (it != monomials.end() && *it == m) {
    monomials.erase(it);
  } else {
    monomials.insert(it, m);
  }
}

unsigned AnfPolynomial::degree() const {
  unsigned d = 0;
  for (AnfMonomial m : monomials) {
    d = std::max<unsigned>(d, std::popcount(m));
  }
  return d;
}

std::vector<std::uint8_t> component_function(const TruthTable& t,
                                             unsigned bit) {
  t.validate();
  if (bit >= t.output_bits) {
    throw std::out_of_range("component bit index out of range");
  }
  std::vector<std::uint8_t> f(t.outputs.size());
  for (std::size_t x = 0; x < t.outputs.size(); ++x) {
    f[x] = (t.outputs[x] >> bit) & 1;
  }
  return f;
}

std::vector<std::uint8_t> moebius_transform(std::vector<std::uint8_t> f) {
  if (f.empty() || !std::has_single_bit(f.size())) {
    throw std::invalid_argument("moebius transform needs 2^n entries");
  }
  for (std::size_t step = 1; step < f.size(); step <<= 1) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (x & step) f[x] ^= f[x ^ step];
    }
  }
  return f;
}

AnfSystem derive_anf_system(const TruthTable& t) {
  t.validate();
  AnfSystem s;
  s.input_bits = t.input_bits;
  s.polys.resize(t.output_bits);
  for (unsigned j = 0; j < t.output_bits; ++j) {
    const std::vector<std::uint8_t> coeff =
        moebius_transform(component_function(t, j));
    for (std::size_t mask = 0; mask < coeff.size(); ++mask) {
      if (coeff[mask]) s.polys[j].monomials.push_back(AnfMonomial(mask));
    }
  }
  return s;
}

int evaluate_anf(const AnfPolynomial& poly, std::uint16_t input) {
  int acc = 0;
  for (AnfMonomial m : poly.monomials) {
    acc ^= ((input & m) == m) ? 1 : 0;
  }
  return acc;
}

std::uint16_t evaluate_system(const AnfSystem& s, std::uint16_t input) {
  std::uint16_t out = 0;
  for (std::size_t j = 0; j < s.polys.size(); ++j) {
    out = std::uint16_t(out | (evaluate_anf(s.polys[j], input) << j));
  }
  return out;
}

unsigned algebraic_degree(const AnfSystem& s) {
  unsigned d = 0;
  for (const AnfPolynomial& p : s.polys) d = std::max(d, p.degree());
  return d;
}

std::string monomial_to_string(AnfMonomial m) {
  if (m == 0) return "1";
  std::string out;
  for (unsigned i = 0; i < 16; ++i) {
    if ((m >> i) & 1u) {
      out += "x";
      out += std::to_string(i);
    }
  }
  return out;
}

std::string poly_to_string(const AnfPolynomial& poly) {
  if (poly.monomials.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < poly.monomials.size(); ++i) {
    if (i != 0) out += " ^ ";
    out += monomial_to_string(poly.monomials[i]);
  }
  return out;
}

std::vector<std::string> system_to_strings(const AnfSystem& s) {
  std::vector<std::string> lines;
  lines.reserve(s.polys.size());
  for (std::size_t j = 0; j < s.polys.size(); ++j) {
    lines.push_back("y" + std::to_string(j) + " = " +
                    poly_to_string(s.polys[j]));
  }
  return lines;
}

namespace {

TruthTable table_from_array(const std::array<Nibble, 16>& arr) {
  TruthTable t;
  t.input_bits = 4;
  t.output_bits = 4;
  t.outputs.assign(arr.begin(), arr.end());
  return t;
}

bool parse_bits(const std::string& s, unsigned& value) {
  value = 0;
  for (char c : s) {
    if (c != '0' && c != '1') return false;
    value = (value << 1) | unsigned(c - '0');
  }
  return !s.empty();
}

}  // namespace

TruthTable sbox_truth_table() { return table_from_array(sbox_table()); }

TruthTable inv_sbox_truth_table() { return table_from_array(inv_sbox_table()); }

TruthTable parse_truth_table(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<std::pair<int, std::string>> lines;  // (line number, content)
  for (int lineno = 1; std::getline(in, raw); ++lineno) {
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = raw.find_last_not_of(" \t\r");
    lines.emplace_back(lineno, raw.substr(b, e - b + 1));
  }
  if (lines.empty()) {
    throw std::invalid_argument("truth table text is empty");
  }

  // Single line of hex digits: one 4-bit output per entry.
  if (lines.size() == 1 &&
      lines[0].second.find_first_of(" \t") == std::string::npos) {
    const std::string& hex = lines[0].second;
    if (!std::has_single_bit(hex.size())) {
      throw std::invalid_argument(
          "hex truth table needs a power-of-two digit count, got " +
          std::to_string(hex.size()));
    }
    TruthTable t;
    t.input_bits = unsigned(std::bit_width(hex.size()) - 1);
    t.output_bits = 4;
    for (char c : hex) {
      const int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                    : (c >= 'a' && c <= 'f')                    ? c - 'a' + 10
                    : (c >= 'A' && c <= 'F')                    ? c - 'A' + 10
                                                                : -1;
      if (d < 0) {
        throw std::invalid_argument("line 1: bad hex digit '" +
                                    std::string(1, c) + "'");
      }
      t.outputs.push_back(std::uint16_t(d));
    }
    t.validate();
    return t;
  }

  // One "<input-bits> <output-bits>" line per entry.
  unsigned n = 0, m = 0;
  std::vector<std::uint16_t> outputs;
  std::vector<bool> seen;
  for (const auto& [lineno, line] : lines) {
    std::istringstream ls(line);
    std::string in_bits, out_bits, extra;
    ls >> in_bits >> out_bits;
    if (out_bits.empty() || (ls >> extra)) {
      throw std::invalid_argument(
          "line " + std::to_string(lineno) +
          ": expected \"<input-bits> <output-bits>\"");
    }
    if (n == 0) {
      n = unsigned(in_bits.size());
      m = unsigned(out_bits.size());
      if (n < 1 || n > 8 || m < 1 || m > 8) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": bit widths must be in 1..8");
      }
      outputs.assign(std::size_t(1) << n, 0);
      seen.assign(std::size_t(1) << n, false);
    }
    unsigned input = 0, output = 0;
    if (in_bits.size() != n || !parse_bits(in_bits, input)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": bad input bits \"" + in_bits + "\"");
    }
    if (out_bits.size() != m || !parse_bits(out_bits, output)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": bad output bits \"" + out_bits + "\"");
    }
    if (seen[input]) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": duplicate input \"" + in_bits + "\"");
    }
    seen[input] = true;
    outputs[input] = std::uint16_t(output);
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) {
      throw std::invalid_argument("truth table is missing input " +
                                  std::to_string(v));
    }
  }
  TruthTable t;
  t.input_bits = n;
  t.output_bits = m;
  t.outputs = std::move(outputs);
  t.validate();
  return t;
}

bool is_bijective(const TruthTable& t) {
  if (t.input_bits != t.output_bits) return false;
  std::vector<bool> hit(t.outputs.size(), false);
  for (std::uint16_t v : t.outputs) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace qminiaes
