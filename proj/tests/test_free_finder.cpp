#include <doctest.h>

#include <random>

#include "freelie/errors.hpp"
#include "freelie/free_finder.hpp"
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

UfnAutomaton family(std::size_t n) { return build_automaton(normalize_presentation(family_A(n))); }

void check_substitutions(const UfnAutomaton& aut, const FreePairCertificate& c) {
  for (std::size_t len = 1; len <= 4; ++len)
    for (const auto& W : all_words(2, len, len))
      CHECK(aut.run(c.base_vertex, substitute(W, c.u, c.v)) == c.base_vertex);
}

}  // namespace

TEST_CASE("check_well_based") {
  const auto a4 = family(2);
  const StateId x1 = *a4.find_state("x1");
  CHECK(check_well_based(a4, x1, Word{1, 0}));
  CHECK_FALSE(check_well_based(a4, x1, Word{0}));
  CHECK(check_well_based(a4, x1, Word{}));
  CHECK_THROWS_AS(check_well_based(a4, 99, Word{}), UnknownState);
}

TEST_CASE("find_cycle_pair") {
  const auto a4 = family(2);
  auto c = find_cycle_pair(a4);
  CHECK(a4.name(c.vertex) == "x1");
  CHECK(c.first == Word{1, 0});
  CHECK(c.second == Word{2, 0});

  const auto free = from("ab", {});
  c = find_cycle_pair(free);
  CHECK(free.name(c.vertex) == "ε");
  CHECK(c.first == word("a"));
  CHECK(c.second == word("b"));

  CHECK_THROWS_AS(find_cycle_pair(from("ab", {"ba"})), PolynomialGrowth);
}

TEST_CASE("find_regular_pair on the free algebra") {
  // Cycles a, b at the root; (2,2) gives a^2 b^2 -> bbaa and (3,2) gives
  // a^3 b^2 -> bbaaa, both based at the root.
  const auto free = from("ab", {});
  const auto c = find_regular_pair(free);
  CHECK(c.u == word("bbaa"));
  CHECK(c.v == word("bbaaa"));
  CHECK(free.name(c.base_vertex) == "ε");
  CHECK(c.u_exponents == std::array<std::size_t, 2>{2, 2});
  CHECK(c.v_exponents == std::array<std::size_t, 2>{3, 2});
  CHECK(ufn_compare(c.u, c.v) == UfnOutcome::Greater);
  check_substitutions(free, c);
}

TEST_CASE("find_regular_pair on the family") {
  const auto a4 = family(2);
  auto c = find_regular_pair(a4);
  CHECK(a4.alphabet().format(c.u) == "x3x1x3x1x2x1x2x1");
  CHECK(a4.alphabet().format(c.v) == "x3x1x3x1x2x1x2x1x2x1");
  CHECK(a4.name(c.base_vertex) == "x1");
  check_substitutions(a4, c);

  const auto a5 = family(3);
  c = find_regular_pair(a5);
  CHECK(c.u.size() == 12);
  CHECK(c.v.size() == 15);
  CHECK(a5.name(c.cycles.vertex) == "x1x2");
  validate_certificate(a5, c);
  check_substitutions(a5, c);
}

TEST_CASE("find_regular_pair errors") {
  CHECK_THROWS_AS(find_regular_pair(from("ab", {"ba"})), PolynomialGrowth);
  CHECK_THROWS_AS(find_regular_pair(from("ab", {}), 2), std::invalid_argument);
  // Four candidates (2,2) (3,2) (2,3) (4,2) at the root: the first two already
  // pair up, so cap 4 is enough there.
  CHECK_NOTHROW(find_regular_pair(from("ab", {}), 4));
}

TEST_CASE("search is deterministic and independent of execution") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto aut = family(n);
    const auto a = find_regular_pair(aut, kDefaultCandidateCap, Execution::Serial);
    const auto b = find_regular_pair(aut, kDefaultCandidateCap, Execution::Parallel);
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    CHECK(a.base_vertex == b.base_vertex);
  }
}

TEST_CASE("validate_certificate rejects tampering") {
  const auto a4 = family(2);
  const auto good = find_regular_pair(a4);
  auto bad = good;
  bad.v = bad.u;
  bad.bracket_v = bad.bracket_u;
  CHECK_THROWS_AS(validate_certificate(a4, bad), InvalidCertificate);
  bad = good;
  std::swap(bad.u, bad.v);
  std::swap(bad.bracket_u, bad.bracket_v);
  CHECK_THROWS_AS(validate_certificate(a4, bad), InvalidCertificate);
  bad = good;
  bad.base_vertex = a4.root();
  CHECK_THROWS_AS(validate_certificate(a4, bad), InvalidCertificate);
  bad = good;
  bad.bracket_u = BracketTree::leaf(0);
  CHECK_THROWS_AS(validate_certificate(a4, bad), InvalidCertificate);
}

TEST_CASE("random exponential automata: rotations stay well-based, certificates validate") {
  std::size_t exponential = 0;
  for (std::uint64_t s = 0; s < 200 && exponential < 40; ++s) {
    const auto aut = build_automaton(fixtures::random_presentation(7000 + s));
    if (!classify_growth(aut).exponential) continue;
    ++exponential;
    const auto cycles = find_cycle_pair(aut);
    const Word w = cycles.first.power(2) + cycles.second;
    REQUIRE(check_well_based(aut, cycles.vertex, w));
    for (std::size_t k = 0; k < w.size(); ++k) {
      const StateId shifted = aut.run(cycles.vertex, w.prefix(k));
      CHECK(check_well_based(aut, shifted, w.rotated(k)));
    }
    const auto c = find_regular_pair(aut);
    validate_certificate(aut, c);
    check_substitutions(aut, c);
  }
  CHECK(exponential > 10);
}
