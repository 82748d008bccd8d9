#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qminiaes/anf.hpp"
#include "qminiaes/miniaes.hpp"

using namespace qminiaes;

namespace {

// The four output-bit monomial sets of the forward S-box, derived by hand
// from the truth table and pinned here as an independent fixture.
const std::vector<std::vector<AnfMonomial>> kForwardMasks = {
    {2, 5, 8, 9, 11},
    {0, 1, 2, 3, 5, 6, 9, 10, 12, 13, 14},
    {0, 3, 4, 5, 8, 10, 11},
    {0, 1, 4, 6, 7, 8, 12, 14},
};

std::vector<std::uint8_t> random_bits(std::mt19937& rng, std::size_t len) {
  std::vector<std::uint8_t> f(len);
  for (auto& b : f) b = std::uint8_t(rng() & 1);
  return f;
}

}  // namespace

TEST_SUITE("anf") {

TEST_CASE("moebius transform of tiny functions") {
  // AND has the single monomial x0x1; XOR is its own coefficient vector.
  CHECK(moebius_transform({0, 0, 0, 1}) ==
        std::vector<std::uint8_t>{0, 0, 0, 1});
  CHECK(moebius_transform({0, 1, 1, 0}) ==
        std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(moebius_transform({1, 1, 1, 1}) ==
        std::vector<std::uint8_t>{1, 0, 0, 0});
}

TEST_CASE("moebius transform rejects non-power-of-two lengths") {
  CHECK_THROWS_AS(moebius_transform({0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(moebius_transform({}), std::invalid_argument);
}

TEST_CASE("moebius transform is an involution") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = random_bits(rng, 16);
    CHECK(moebius_transform(moebius_transform(f)) == f);
  }
  for (unsigned n = 1; n <= 8; ++n) {
    const auto f = random_bits(rng, std::size_t(1) << n);
    CHECK(moebius_transform(moebius_transform(f)) == f);
  }
}

TEST_CASE("component_function extracts output bits") {
  const TruthTable t = sbox_truth_table();
  const auto bit0 = component_function(t, 0);
  const auto bit3 = component_function(t, 3);
  CHECK(bit0[0] == 0);  // output 1110, LSB
  CHECK(bit3[0] == 1);  // output 1110, MSB
  CHECK_THROWS_AS(component_function(t, 4), std::out_of_range);

  TruthTable zeroed = t;
  for (auto& v : zeroed.outputs) v &= 0b1110;
  CHECK(component_function(zeroed, 0) ==
        std::vector<std::uint8_t>(16, 0));
}

TEST_CASE("forward s-box system matches the pinned monomial sets") {
  const AnfSystem s = derive_anf_system(sbox_truth_table());
  REQUIRE(s.polys.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    CAPTURE(j);
    CHECK(s.polys[j].monomials == kForwardMasks[j]);
  }
  CHECK(s.polys[1].monomials.size() == 11);
  CHECK(s.polys[1].contains(0));       // constant 1
  CHECK(s.polys[1].contains(0b1101));  // x0x2x3
  CHECK(s.polys[1].contains(0b1110));  // x1x2x3
}

TEST_CASE("inverse s-box system pinned") {
  const AnfSystem s = derive_anf_system(inv_sbox_truth_table());
  REQUIRE(s.polys.size() == 4);
  CHECK(s.polys[0].monomials ==
        std::vector<AnfMonomial>{1, 3, 4, 6, 7, 8, 9, 12, 13});
  CHECK(s.polys[1].monomials == std::vector<AnfMonomial>{0, 2, 4, 9, 12, 13});
  CHECK(s.polys[2].monomials ==
        std::vector<AnfMonomial>{0, 1, 4, 9, 10, 11, 14});
  CHECK(s.polys[3].monomials == std::vector<AnfMonomial>{0, 1, 2, 4, 7, 8});
  CHECK(algebraic_degree(s) == 3);
}

TEST_CASE("evaluation agrees with the source tables, exhaustively") {
  const AnfSystem fwd = derive_anf_system(sbox_truth_table());
  const AnfSystem inv = derive_anf_system(inv_sbox_truth_table());
  for (std::uint16_t v = 0; v < 16; ++v) {
    CHECK(evaluate_system(fwd, v) == nibble_sub(Nibble(v)));
    CHECK(evaluate_system(inv, v) == inv_nibble_sub(Nibble(v)));
  }
  CHECK(evaluate_anf(fwd.polys[0], 0) == 0);
  CHECK(evaluate_anf(fwd.polys[1], 0) == 1);

  AnfPolynomial one;
  one.toggle(0);
  for (std::uint16_t v = 0; v < 16; ++v) CHECK(evaluate_anf(one, v) == 1);
}

TEST_CASE("random tables reassemble exactly from their ANF") {
  std::mt19937 rng(777);
  for (unsigned n = 1; n <= 8; ++n) {
    TruthTable t;
    t.input_bits = n;
    t.output_bits = 1 + rng() % 8;
    for (std::size_t v = 0; v < (std::size_t(1) << n); ++v) {
      t.outputs.push_back(std::uint16_t(rng() & ((1u << t.output_bits) - 1)));
    }
    const AnfSystem s = derive_anf_system(t);
    for (std::size_t v = 0; v < t.outputs.size(); ++v) {
      CHECK(evaluate_system(s, std::uint16_t(v)) == t.outputs[v]);
    }
  }
}

TEST_CASE("composing the s-box with its inverse gives the identity system") {
  TruthTable comp;
  comp.input_bits = 4;
  comp.output_bits = 4;
  for (unsigned v = 0; v < 16; ++v) {
    comp.outputs.push_back(nibble_sub(inv_nibble_sub(Nibble(v))));
  }
  const AnfSystem s = derive_anf_system(comp);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(s.polys[j].monomials ==
          std::vector<AnfMonomial>{AnfMonomial(1u << j)});
  }
  CHECK(algebraic_degree(s) == 1);
}

TEST_CASE("algebraic degree") {
  CHECK(algebraic_degree(derive_anf_system(sbox_truth_table())) == 3);

  TruthTable ident1;
  ident1.input_bits = 1;
  ident1.output_bits = 1;
  ident1.outputs = {0, 1};
  CHECK(algebraic_degree(derive_anf_system(ident1)) == 1);
}

TEST_CASE("polynomial toggle keeps set semantics") {
  AnfPolynomial p;
  p.toggle(5);
  p.toggle(2);
  p.toggle(5);  // cancels
  CHECK(p.monomials == std::vector<AnfMonomial>{2});
  CHECK(p.degree() == 1);
  CHECK_FALSE(p.contains(5));
}

TEST_CASE("rendering is deterministic and ascending") {
  const AnfSystem s = derive_anf_system(sbox_truth_table());
  CHECK(poly_to_string(s.polys[0]) == "x1 ^ x0x2 ^ x3 ^ x0x3 ^ x0x1x3");
  CHECK(poly_to_string(s.polys[2]) ==
        "1 ^ x0x1 ^ x2 ^ x0x2 ^ x3 ^ x1x3 ^ x0x1x3");
  CHECK(monomial_to_string(0) == "1");
  CHECK(monomial_to_string(0b1101) == "x0x2x3");
  CHECK(poly_to_string(AnfPolynomial{}) == "0");

  const auto lines = system_to_strings(s);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "y0 = x1 ^ x0x2 ^ x3 ^ x0x3 ^ x0x1x3");
}

TEST_CASE("truth table file parsing: hex form") {
  const TruthTable t = parse_truth_table("e4d12fb83a6c5907\n");
  CHECK(t.input_bits == 4);
  CHECK(t.output_bits == 4);
  CHECK(t.outputs == sbox_truth_table().outputs);
  CHECK(is_bijective(t));

  CHECK_THROWS_AS(parse_truth_table("e4d12\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_truth_table("zz\n"), std::invalid_argument);
}

TEST_CASE("truth table file parsing: line-per-entry form") {
  const std::string text =
      "# two-bit parity\n"
      "00 0\n"
      "01 1\n"
      "10 1\n"
      "11 0\n";
  const TruthTable t = parse_truth_table(text);
  CHECK(t.input_bits == 2);
  CHECK(t.output_bits == 1);
  CHECK(t.outputs == std::vector<std::uint16_t>{0, 1, 1, 0});
  CHECK_FALSE(is_bijective(t));

  CHECK_THROWS_WITH_AS(parse_truth_table("00 0\n01 1\n10 1\n"),
                       doctest::Contains("missing input"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_truth_table("00 0\n00 1\n10 1\n11 0\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_truth_table(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_truth_table("00 0 junk\n01 1\n10 1\n11 0\n"),
                  std::invalid_argument);
}

}  // TEST_SUITE
