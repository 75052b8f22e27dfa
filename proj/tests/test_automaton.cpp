#include <doctest.h>

#include "freelie/automaton.hpp"
#include "freelie/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace freelie;
using oracle::word;

namespace {

UfnAutomaton from(const char* letters, std::vector<const char*> forbidden) {
  Presentation p{Alphabet::of_chars(letters), {}};
  for (auto f : forbidden) p.forbidden.push_back(word(f));
  return build_automaton(normalize_presentation(p));
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("family_A") {
  auto p = family_A(1);
  CHECK(p.alphabet.size() == 3);
  CHECK(p.forbidden.empty());
  p = family_A(2);
  CHECK(p.alphabet.size() == 4);
  CHECK(p.forbidden.size() == 4);
  for (Letter x = 0; x < 4; ++x) CHECK(std::count(p.forbidden.begin(), p.forbidden.end(), Word{x, x}) == 1);
  p = family_A(3);
  CHECK(p.alphabet.size() == 5);
  CHECK(p.forbidden.size() == 5 + 5 * 4);
  CHECK(std::count(p.forbidden.begin(), p.forbidden.end(), Word{0, 1, 0}) == 1);
  CHECK(family_A(2, GapConvention::Prose).forbidden.size() == 4 + 4 * 3);
  CHECK(normalize_presentation(family_A(4)).forbidden == family_A(4).forbidden);
}

TEST_CASE("family_A zero words match the definition") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto aut = build_automaton(normalize_presentation(family_A(n)));
    for (std::size_t len = 1; len <= 6; ++len)
      for (const auto& s : oracle::words(n + 2, len)) CHECK(aut.accepts(word(s)) == !oracle::family_zero(s, n));
  }
}

TEST_CASE("normalize_presentation") {
  const auto ab = Alphabet::of_chars("ab");
  CHECK(normalize_presentation({ab, {word("aa"), word("aab")}}).forbidden == std::vector<Word>{word("aa")});
  CHECK(normalize_presentation({ab, {word("ab"), word("ba")}}).forbidden == std::vector<Word>{word("ab"), word("ba")});
  CHECK(normalize_presentation({ab, {word("aa"), word("aa")}}).forbidden == std::vector<Word>{word("aa")});
  CHECK_THROWS(normalize_presentation({ab, {Word{}}}));
  CHECK_THROWS(normalize_presentation({ab, {word("c")}}));
}

TEST_CASE("build_automaton examples") {
  const auto a4 = build_automaton(normalize_presentation(family_A(2)));
  CHECK(a4.names() == std::vector<std::string>{"ε", "x1", "x2", "x3", "x4"});
  for (Letter i = 0; i < 4; ++i)
    for (Letter j = 0; j < 4; ++j) CHECK(a4.step(i + 1, j) == (i == j ? kDead : j + 1));

  const auto free = from("ab", {});
  CHECK(free.state_count() == 1);
  CHECK(free.step(0, 0) == 0);
  CHECK(free.step(0, 1) == 0);

  const auto aa = from("ab", {"aa"});
  CHECK(aa.names() == std::vector<std::string>{"ε", "a", "b"});
  CHECK(aa.step(*aa.find_state("a"), 0) == kDead);
}

TEST_CASE("determinize_graph") {
  const auto a4 = build_automaton(normalize_presentation(family_A(2)));
  LabeledGraph g{a4.alphabet(), a4.names(), {}, {0}};
  for (std::size_t q = 0; q < a4.state_count(); ++q)
    for (Letter x = 0; x < 4; ++x)
      if (a4.step(static_cast<StateId>(q), x) != kDead)
        g.edges.push_back({q, x, static_cast<std::size_t>(a4.step(static_cast<StateId>(q), x))});
  const auto d = determinize_graph(g);
  CHECK(d.names() == a4.names());
  CHECK(count_words(d, 8) == count_words(a4, 8));

  // Two a-edges out of the root merge into one subset state.
  LabeledGraph nd{Alphabet::of_chars("ab"), {"r", "p", "q"}, {{0, 0, 1}, {0, 0, 2}, {1, 1, 0}, {2, 0, 0}, {0, 1, 0}}, {0}};
  const auto m = determinize_graph(nd);
  const StateId pq = m.step(m.root(), 0);
  REQUIRE(pq != kDead);
  CHECK(m.name(pq) == "{p,q}");

  LabeledGraph ab_only{Alphabet::of_chars("ab"), {"s", "t", "u"}, {{0, 0, 1}, {1, 1, 2}}, {0}};
  CHECK_THROWS_AS(determinize_graph(ab_only), NotSubwordClosed);
}

TEST_CASE("count_words examples") {
  const auto a4 = build_automaton(normalize_presentation(family_A(2)));
  std::vector<Integer> expect;
  Integer c = 4;
  for (int k = 1; k <= 10; ++k, c *= 3) expect.push_back(c);
  CHECK(count_words(a4, 10) == expect);
  CHECK(count_words(from("ab", {}), 5) == ints({2, 4, 8, 16, 32}));
  CHECK(count_words(from("ab", {"ba"}), 8) == ints({2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK(growth_function(ints({2, 4})) == ints({1, 3, 7}));
}

TEST_CASE("count_words serial and parallel agree") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto aut = build_automaton(fixtures::random_presentation(1000 + s));
    CHECK(count_words(aut, 25, Execution::Serial) == count_words(aut, 25, Execution::Parallel));
  }
  const auto a6 = build_automaton(normalize_presentation(family_A(4)));
  CHECK(count_words(a6, 30, Execution::Serial) == count_words(a6, 30, Execution::Parallel));
}

TEST_CASE("classify_growth examples") {
  const auto a4 = build_automaton(normalize_presentation(family_A(2)));
  auto g = classify_growth(a4);
  CHECK(g.exponential);
  REQUIRE(g.witness);
  CHECK(a4.name(g.witness->vertex) == "x1");
  CHECK(g.witness->first == Word{1, 0});
  CHECK(g.witness->second == Word{2, 0});

  g = classify_growth(from("a", {}));
  CHECK_FALSE(g.exponential);
  CHECK(g.degree == 1);
  g = classify_growth(from("ab", {"ba"}));
  CHECK_FALSE(g.exponential);
  CHECK(g.degree == 2);
  g = classify_growth(from("ab", {"a", "b"}));
  CHECK_FALSE(g.exponential);
  CHECK(g.degree == 0);
}

TEST_CASE("random presentations: acceptance, closure, counts, growth") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto p = fixtures::random_presentation(s);
    const auto aut = build_automaton(p);
    const auto forbidden = fixtures::forbidden_strings(p);
    const std::size_t k = p.alphabet.size();
    for (std::size_t len = 1; len <= 8; ++len) {
      for (const auto& w : oracle::words(k, len)) {
        bool clean = true;
        for (const auto& f : forbidden) clean = clean && w.find(f) == std::string::npos;
        CHECK(aut.accepts(word(w)) == clean);
        if (clean && len <= 6)
          for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = i + 1; j <= len; ++j) CHECK(aut.accepts(word(w.substr(i, j - i))));
      }
    }
    const auto brute = oracle::count_avoiding(k, forbidden, 8);
    const auto counts = count_words(aut, 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(counts[i] == brute[i]);
    CHECK(fixtures::growth_inconsistency(aut) == "");
  }
}

TEST_CASE("family growth bound") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto counts = count_words(build_automaton(normalize_presentation(family_A(n))), 12);
    for (std::size_t k = 1; k <= 12; ++k) CHECK(counts[k - 1] >= Integer(1) << (k / (n + 1)));
  }
}
