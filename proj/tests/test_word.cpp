#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcrs/rng.hpp"
#include "fcrs/word.hpp"
#include "helpers.hpp"

using namespace fcrs;

TEST_CASE("letters invert by flipping the low bit") {
  Letter a = Letter::make(3, +1);
  CHECK(a.generator() == 3);
  CHECK(a.sign() == +1);
  CHECK(a.inverse().sign() == -1);
  CHECK(a.inverse().generator() == 3);
  CHECK(a.inverse().inverse() == a);
}

TEST_CASE("alphabet parses and prints letters") {
  Alphabet alphabet({"r", "s", "x.v"});
  CHECK(alphabet.generator_count() == 3);
  CHECK(alphabet.letter_count() == 6);
  CHECK(alphabet.print(alphabet.parse_letter("s")) == "s");
  CHECK(alphabet.print(alphabet.parse_letter("x.v^-1")) == "x.v^-1");
  CHECK_THROWS_AS(alphabet.parse_letter("q"), ParseError);
  CHECK_THROWS_AS(alphabet.parse_letter("r^-2"), ParseError);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), ParseError);
  CHECK_THROWS_AS(Alphabet({"bad token"}), ParseError);
  CHECK_THROWS_AS(Alphabet({"1"}), ParseError);
}

TEST_CASE("word parse and print round-trip, empty word prints as 1") {
  Alphabet alphabet({"r", "s"});
  CHECK(alphabet.print(alphabet.parse_word("")) == "1");
  CHECK(alphabet.print(alphabet.parse_word("1")) == "1");
  CHECK(alphabet.print(alphabet.parse_word("  r   s^-1 ")) == "r s^-1");
  Word w = alphabet.parse_word("r s r^-1");
  CHECK(w.size() == 3);
  CHECK(alphabet.parse_word(alphabet.print(w)) == w);
}

TEST_CASE("formal inverse on the worked examples") {
  Alphabet alphabet({"r", "s", "x"});
  CHECK(formal_inverse(alphabet.parse_word("")) == alphabet.parse_word(""));
  CHECK(alphabet.print(formal_inverse(alphabet.parse_word("x"))) == "x^-1");
  CHECK(alphabet.print(formal_inverse(alphabet.parse_word("r s"))) == "s^-1 r^-1");
}

TEST_CASE("formal inverse is an involutive anti-homomorphism") {
  Alphabet alphabet({"a", "b", "c"});
  SplitMix64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = testing::random_word(alphabet, rng.below(6), rng);
    Word v = testing::random_word(alphabet, rng.below(6), rng);
    CHECK(formal_inverse(formal_inverse(u)) == u);
    CHECK(formal_inverse(concat(u, v)) == concat(formal_inverse(v), formal_inverse(u)));
  }
}

TEST_CASE("concatenation adds lengths") {
  Alphabet alphabet({"a", "b"});
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = testing::random_word(alphabet, rng.below(8), rng);
    Word v = testing::random_word(alphabet, rng.below(8), rng);
    CHECK(concat(u, v).size() == u.size() + v.size());
  }
}

TEST_CASE("letter powers") {
  Alphabet alphabet({"x"});
  Letter x = alphabet.positive(0);
  CHECK(letter_power(x, 0).empty());
  CHECK(alphabet.print(letter_power(x, 3)) == "x x x");
  CHECK(alphabet.print(letter_power(x, -2)) == "x^-1 x^-1");
}

TEST_CASE("word hashing agrees with equality") {
  WordHash hash;
  Alphabet alphabet({"a", "b"});
  Word u = alphabet.parse_word("a b a^-1");
  Word v = alphabet.parse_word("a b a^-1");
  CHECK(u == v);
  CHECK(hash(u) == hash(v));
}
