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
#include <cstddef>
#include <cstdint>
#include <string>

namespace qminiaes {

// A GF(2^4) element. Bit i is the coefficient of x^i, so bit 0 is the
// constant term and the least-significant bit. Values are always < 16.
using Nibble = std::uint8_t;

// Product in GF(2^4) modulo x^4 + x + 1.
Nibble gf16_mul(Nibble a, Nibble b);

// 4-bit S-box and its inverse.
Nibble nibble_sub(Nibble n);
Nibble inv_nibble_sub(Nibble n);

// The forward/inverse substitution tables, indexed by input value.
const std::array<Nibble, 16>& sbox_table();
const std::array<Nibble, 16>& inv_sbox_table();

// 16-bit cipher state: four ordered nibbles n0..n3. The canonical text form
// is 16 binary characters, most-significant bit of n0 leftmost, with an
// optional space between nibble groups: "0111 0010 1100 0110".
struct Block {
  std::array<Nibble, 4> nibbles{};

  // n0 occupies the top 4 bits of the packed value.
  static Block from_value(std::uint16_t v);
  std::uint16_t to_value() const;

  // Accepts both spaced and unspaced text. Throws std::invalid_argument
  // with a description of the defect (wrong length, bad character).
  static Block parse(const std::string& text);
  std::string to_string() const;

  Nibble& operator[](std::size_t i) { return nibbles[i]; }
  const Nibble& operator[](std::size_t i) const { return nibbles[i]; }

  // Bit `bit` (LSB = 0) of nibble `nibble`.
  int bit(std::size_t nibble, unsigned bit) const {
    return (nibbles[nibble] >> bit) & 1;
  }

  friend Block operator^(const Block& a, const Block& b) {
    Block r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] ^ b[i];
    return r;
  }
  friend bool operator==(const Block&, const Block&) = default;
};

struct RoundKeys {
  Block k0;  // the user-supplied key, verbatim
  Block k1;
  Block k2;
};

// One row of the trace table produced by encrypt. The permutations column
// holds the ShiftRow+MixColumn output before the K1 addition.
struct EncryptionTrace {
  Block plaintext;
  Block key;
  Block after_sbox1;
  Block after_permutations1;
  Block after_sbox2;
  Block cipher;
};

// NibbleSub applied to all four nibbles, and its inverse.
Block sub_nibbles(const Block& b);
Block inv_sub_nibbles(const Block& b);

// Swaps nibbles 1 and 3. Involution.
Block shift_row(const Block& b);

// [3 2; 2 3] over GF(2^4), applied to nibble pairs (0,1) and (2,3).
// Involution: the matrix squares to the identity.
Block mix_column(const Block& b);

// Round keys from the 16-bit master key: nibble cascade with one S-box
// application per round and round constants 0b0001 and 0b0010.
RoundKeys key_schedule(const Block& key);

// Two-round encryption; returns the full per-stage trace.
EncryptionTrace encrypt(const Block& p, const Block& key);

// Exact inverse of encrypt.
Block decrypt(const Block& c, const Block& key);

}  // namespace qminiaes
