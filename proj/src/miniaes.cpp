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

#include "qminiaes/miniaes.hpp"

#include <stdexcept>

namespace qminiaes {

namespace {

constexpr std::array<Nibble, 16> kSbox = {14, 4,  13, 1, 2, 15, 11, 8,
                                          3,  10, 6,  12, 5, 9,  0,  7};
constexpr std::array<Nibble, 16> kInvSbox = {14, 3,  4, 8,  1,  12, 10, 15,
                                             7,  13, 9, 6,  11, 2,  0,  5};

constexpr Nibble kRcon1 = 0b0001;
constexpr Nibble kRcon2 = 0b0010;

}  // namespace

Nibble gf16_mul(Nibble a, Nibble b) {
  // Carry-less multiply, then reduce modulo x^4 + x + 1.
  unsigned p = 0;
  for (unsigned i = 0; i < 4; ++i) {
    if ((b >> i) & 1u) p ^= static_cast<unsigned>(a) << i;
  }
  for (int d = 7; d >= 4; --d) {
    if ((p >> d) & 1u) p ^= 0b10011u << (d - 4);
  }
  return static_cast<Nibble>(p);
}

Nibble nibble_sub(Nibble n) { return kSbox[n & 0xF]; }

Nibble inv_nibble_sub(Nibble n) { return kInvSbox[n & 0xF]; }

const std::array<Nibble, 16>& sbox_table() {
  static const std::array<Nibble, 16> table = kSbox;
  return table;
}

const std::array<Nibble, 16>& inv_sbox_table() {
  static const std::array<Nibble, 16> table = kInvSbox;
  return table;
}

Block Block::from_value(std::uint16_t v) {
  Block b;
  for (std::size_t i = 0; i < 4; ++i) {
    b[i] = static_cast<Nibble>((v >> (12 - 4 * i)) & 0xF);
  }
  return b;
}

std::uint16_t Block::to_value() const {
  std::uint16_t v = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    v = static_cast<std::uint16_t>((v << 4) | (nibbles[i] & 0xF));
  }
  return v;
}

Block Block::parse(const std::string& text) {
  std::string bits;
  bits.reserve(16);
  for (char c : text) {
    if (c == ' ') continue;
    if (c != '0' && c != '1') {
      throw std::invalid_argument("block text contains '" + std::string(1, c) +
                                  "'; expected binary digits");
    }
    bits.push_back(c);
  }
  if (bits.size() != 16) {
    throw std::invalid_argument("block text has " +
                                std::to_string(bits.size()) +
                                " binary digits; expected 16");
  }
  Block b;
  for (std::size_t i = 0; i < 4; ++i) {
    Nibble n = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      n = static_cast<Nibble>((n << 1) | (bits[4 * i + j] - '0'));
    }
    b[i] = n;
  }
  return b;
}

std::string Block::to_string() const {
  std::string out;
  out.reserve(19);
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != 0) out.push_back(' ');
    for (int j = 3; j >= 0; --j) {
      out.push_back(((nibbles[i] >> j) & 1) ? '1' : '0');
    }
  }
  return out;
}

Block sub_nibbles(const Block& b) {
  Block r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = nibble_sub(b[i]);
  return r;
}

Block inv_sub_nibbles(const Block& b) {
  Block r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = inv_nibble_sub(b[i]);
  return r;
}

Block shift_row(const Block& b) { return Block{{b[0], b[3], b[2], b[1]}}; }

Block mix_column(const Block& b) {
  Block r;
  r[0] = gf16_mul(3, b[0]) ^ gf16_mul(2, b[1]);
  r[1] = gf16_mul(2, b[0]) ^ gf16_mul(3, b[1]);
  r[2] = gf16_mul(3, b[2]) ^ gf16_mul(2, b[3]);
  r[3] = gf16_mul(2, b[2]) ^ gf16_mul(3, b[3]);
  return r;
}

RoundKeys key_schedule(const Block& key) {
  const Nibble w0 = key[0], w1 = key[1], w2 = key[2], w3 = key[3];
  const Nibble w4 = w0 ^ nibble_sub(w3) ^ kRcon1;
  const Nibble w5 = w1 ^ w4;
  const Nibble w6 = w2 ^ w5;
  const Nibble w7 = w3 ^ w6;
  const Nibble w8 = w4 ^ nibble_sub(w7) ^ kRcon2;
  const Nibble w9 = w5 ^ w8;
  const Nibble w10 = w6 ^ w9;
  const Nibble w11 = w7 ^ w10;
  return RoundKeys{key, Block{{w4, w5, w6, w7}}, Block{{w8, w9, w10, w11}}};
}

EncryptionTrace encrypt(const Block& p, const Block& key) {
  const RoundKeys rk = key_schedule(key);
  EncryptionTrace t;
  t.plaintext = p;
  t.key = key;
  t.after_sbox1 = sub_nibbles(p ^ rk.k0);
  t.after_permutations1 = mix_column(shift_row(t.after_sbox1));
  t.after_sbox2 = sub_nibbles(t.after_permutations1 ^ rk.k1);
  t.cipher = shift_row(t.after_sbox2) ^ rk.k2;
  return t;
}

Block decrypt(const Block& c, const Block& key) {
  const RoundKeys rk = key_schedule(key);
  Block s = inv_sub_nibbles(shift_row(c ^ rk.k2));
  s = shift_row(mix_column(s ^ rk.k1));
  return inv_sub_nibbles(s) ^ rk.k0;
}

}  // namespace qminiaes
