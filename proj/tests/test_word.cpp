#include <doctest.h>

#include "freelie/errors.hpp"
#include "freelie/word.hpp"
#include "oracles.hpp"

using namespace freelie;
using oracle::word;

TEST_CASE("alphabet parse and format") {
  const Alphabet ab = Alphabet::of_chars("ab");
  CHECK(ab.parse("abba") == Word{0, 1, 1, 0});
  CHECK(ab.format(Word{1, 0}) == "ba");
  CHECK(ab.format(Word{}) == "ε");
  CHECK(ab.parse("ε").empty());

  const Alphabet xs = Alphabet::indexed("x", 12);
  CHECK(xs.parse("x12x1") == Word{11, 0});
  CHECK(xs.to_symbols(Word{2, 0}) == std::vector<std::string>{"x3", "x1"});
  CHECK_THROWS_AS(xs.from_symbols({"y"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{"a", "a"}), std::invalid_argument);
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare(word("ab"), word("b")) == LexOutcome::Less);
  CHECK(lex_compare(word("ab"), word("ab")) == LexOutcome::Equal);
  CHECK(lex_compare(word("a"), word("ab")) == LexOutcome::LeftIsPrefix);
  CHECK(lex_compare(word("ab"), word("a")) == LexOutcome::RightIsPrefix);
  CHECK(lex_compare(word("b"), word("ab")) == LexOutcome::Greater);
}

TEST_CASE("primitive_root") {
  auto r = primitive_root(word("abab"));
  CHECK(r.root == word("ab"));
  CHECK(r.exponent == 2);
  r = primitive_root(word("aba"));
  CHECK(r.root == word("aba"));
  CHECK(r.exponent == 1);
  r = primitive_root(word("aaa"));
  CHECK(r.root == word("a"));
  CHECK(r.exponent == 3);
  CHECK_THROWS(primitive_root(Word{}));

  for (std::size_t len = 1; len <= 10; ++len)
    for (const auto& s : oracle::words(2, len)) {
      const auto got = primitive_root(word(s));
      CHECK(oracle::str(got.root) == oracle::primitive_root(s));
      CHECK(got.exponent * got.root.size() == s.size());
    }
}

TEST_CASE("is_cyclically_conjugate") {
  CHECK(is_cyclically_conjugate(word("ab"), word("ba")));
  CHECK(is_cyclically_conjugate(word("ab"), word("ab")));
  CHECK_FALSE(is_cyclically_conjugate(word("ab"), word("aa")));
  CHECK_FALSE(is_cyclically_conjugate(word("ab"), word("aba")));
  for (const auto& s : oracle::words(3, 4))
    for (const auto& t : oracle::words(3, 4)) {
      bool rot = false;
      for (std::size_t k = 0; k < 4; ++k) rot = rot || oracle::rotate(s, k) == t;
      CHECK(is_cyclically_conjugate(word(s), word(t)) == rot);
    }
}

TEST_CASE("factor_positions") {
  CHECK(factor_positions(word("aba"), word("ababa")) == std::vector<std::size_t>{0, 2});
  CHECK(factor_positions(word("b"), word("aaa")).empty());
  CHECK(factor_positions(word("ab"), word("ab")) == std::vector<std::size_t>{0});
  CHECK_THROWS(factor_positions(Word{}, word("ab")));
}

TEST_CASE("occurrences_in_power") {
  CHECK(occurrences_in_power(word("aba"), word("ab"), 3) == std::vector<std::size_t>{0, 2});
  CHECK(occurrences_in_power(word("ab"), word("ab"), 2) == std::vector<std::size_t>{0, 2});
  CHECK(occurrences_in_power(word("ba"), word("ab"), 3) == std::vector<std::size_t>{1, 3});
  CHECK_THROWS_AS(occurrences_in_power(word("ab"), word("abab"), 2), CyclicInput);
}

TEST_CASE("shift_equation_decompose") {
  auto d = shift_equation_decompose(word("ab"), word("aba"), word("ba"));
  CHECK(d.power == 1);
  CHECK(d.remainder == word("a"));
  d = shift_equation_decompose(word("ab"), word("ab"), word("ab"));
  CHECK(d.power == 1);
  CHECK(d.remainder.empty());
  CHECK_THROWS_AS(shift_equation_decompose(word("ab"), word("ba"), word("ab")), EquationDoesNotHold);
}

TEST_CASE("check_overlap") {
  CHECK(check_overlap(2, 4, word("ababab")));
  CHECK(check_overlap(2, 3, word("ababa")));
  CHECK(check_overlap(1, 1, word("aaaa")));
  CHECK(has_period(word("abaab"), 3));
  CHECK_FALSE(has_period(word("abaab"), 2));
  // Periods 2 and 3 on length 3 < 2 + 3 - 1: the bound is sharp.
  CHECK(has_period(word("aba"), 2));
  CHECK(has_period(word("aba"), 3));
  CHECK_FALSE(has_period(word("aba"), 1));
  CHECK(check_overlap(2, 3, word("aba")));
}

TEST_CASE("all_words is shortlex") {
  const auto ws = all_words(2, 0, 3);
  CHECK(ws.size() == 15);
  CHECK(ws.front().empty());
  CHECK(ws[1] == word("a"));
  CHECK(ws.back() == word("bbb"));
}

TEST_CASE("word helpers") {
  const Word w = word("abcab");
  CHECK(w.rotated(2) == word("cabab"));
  CHECK(w.rotated(5) == w);
  CHECK(word("ab").power(3) == word("ababab"));
  CHECK(w.prefix(2) == word("ab"));
  CHECK(w.suffix(2) == word("ab"));
  CHECK(w.contains(word("ca")));
}
