#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "freelie/errors.hpp"
#include "freelie/verifier.hpp"
#include "oracles.hpp"

using namespace freelie;
using oracle::word;

namespace {

UfnAutomaton free_ab() { return build_automaton(normalize_presentation({Alphabet::of_chars("ab"), {}})); }

UfnAutomaton family(std::size_t n) { return build_automaton(normalize_presentation(family_A(n))); }

FreePairCertificate single_letters(const UfnAutomaton& aut) {
  FreePairCertificate c;
  c.u = word("b");
  c.v = word("a");
  c.base_vertex = aut.root();
  c.cycles = CyclePair{aut.root(), word("a"), word("b")};
  c.u_exponents = {0, 1};
  c.v_exponents = {1, 0};
  c.bracket_u = standard_bracketing(c.u);
  c.bracket_v = standard_bracketing(c.v);
  return c;
}

NcPoly one_plus(std::size_t k, const char* w, int c = 1) {
  return NcPoly::constant(k, 1) + NcPoly::monomial(k, word(w), c);
}

TruncatedUnit random_unit(std::mt19937_64& rng, std::size_t N) {
  std::uniform_int_distribution<int> len(1, 3), letter(0, 1), coef(-2, 2);
  NcPoly p = NcPoly::constant(2, 1);
  for (int i = 0; i < 4; ++i) {
    Word w;
    for (int n = len(rng); n > 0; --n) w.push_back(static_cast<Letter>(letter(rng)));
    p.add_term(w, coef(rng));
  }
  return TruncatedUnit(p, TruncationDegree(N));
}

bool distinct_leads(const LieFreenessReport& r) {
  std::set<Word> seen;
  for (const auto& row : r.rows)
    if (!row.leading || !seen.insert(row.leading->monomial).second) return false;
  return true;
}

}  // namespace

TEST_CASE("lie freeness on the free algebra") {
  const auto aut = free_ab();
  const auto cert = single_letters(aut);
  auto r = verify_lie_freeness(aut, cert, 3);
  CHECK(r.verified);
  REQUIRE(r.rows.size() == 5);
  std::vector<std::string> subs;
  for (const auto& row : r.rows) {
    subs.push_back(oracle::str(row.substituted));
    CHECK(row.accepted);
    REQUIRE(row.leading);
    CHECK(row.leading->monomial == row.substituted);
  }
  CHECK(subs == std::vector<std::string>{"b", "a", "ba", "bba", "baa"});

  r = verify_lie_freeness(aut, cert, 1);
  CHECK(r.verified);
  CHECK(r.rows.size() == 2);
  CHECK_THROWS_AS(verify_lie_freeness(aut, cert, 0), std::invalid_argument);
}

TEST_CASE("lie freeness leading terms match the oracle expansion") {
  const auto aut = free_ab();
  const auto cert = find_regular_pair(aut);
  const auto r = verify_lie_freeness(aut, cert, 4);
  REQUIRE(r.verified);
  for (const auto& row : r.rows) {
    // Bracket the Hall word with u, v images substituted, fully expanded by strings.
    const auto tree = standard_bracketing(row.hall_word);
    const auto pu = oracle::expand_regular(oracle::str(cert.u));
    const auto pv = oracle::expand_regular(oracle::str(cert.v));
    const std::function<oracle::Poly(const BracketTree&)> ev = [&](const BracketTree& t) {
      if (t.is_leaf()) return t.letter() == 1 ? pu : pv;
      return oracle::bracket(ev(t.left()), ev(t.right()));
    };
    const auto image = ev(tree);
    REQUIRE(!image.empty());
    CHECK(oracle::word(image.rbegin()->first) == row.leading->monomial);
  }
}

TEST_CASE("lie freeness on the family") {
  for (std::size_t n : {2, 3}) {
    const auto aut = family(n);
    const auto cert = find_regular_pair(aut);
    const auto r = verify_lie_freeness(aut, cert, 5);
    CHECK(r.verified);
    CHECK(r.rows.size() == 14);
    CHECK(distinct_leads(r));
    for (const auto& row : r.rows) CHECK(row.accepted);
  }
}

TEST_CASE("full expansion agrees with leading terms") {
  const auto aut = family(2);
  const auto cert = find_regular_pair(aut);
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto lead = verify_lie_freeness(aut, cert, d, ExpansionMethod::LeadingTerms);
    const auto full = verify_lie_freeness(aut, cert, d, ExpansionMethod::FullExpansion);
    CHECK(lead.verified == full.verified);
    REQUIRE(lead.rows.size() == full.rows.size());
    for (std::size_t i = 0; i < lead.rows.size(); ++i) {
      CHECK(lead.rows[i].hall_word == full.rows[i].hall_word);
      CHECK(lead.rows[i].leading->monomial == full.rows[i].leading->monomial);
      CHECK(lead.rows[i].leading->coefficient == full.rows[i].leading->coefficient);
    }
  }
}

TEST_CASE("lie freeness serial and parallel agree") {
  const auto aut = family(3);
  const auto cert = find_regular_pair(aut);
  const auto a = verify_lie_freeness(aut, cert, 5, ExpansionMethod::LeadingTerms, Execution::Serial);
  const auto b = verify_lie_freeness(aut, cert, 5, ExpansionMethod::LeadingTerms, Execution::Parallel);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].leading->monomial == b.rows[i].leading->monomial);
}

TEST_CASE("lie freeness rejects a bad certificate") {
  const auto aut = free_ab();
  auto cert = single_letters(aut);
  cert.v = cert.u;
  CHECK_THROWS_AS(verify_lie_freeness(aut, cert, 3), InvalidCertificate);
}

TEST_CASE("truncated units") {
  const TruncationDegree N(3);
  const TruncatedUnit g(one_plus(2, "a"), N);
  CHECK(unit_inverse(g).poly() == NcPoly::constant(2, 1) - NcPoly::monomial(2, word("a")) +
                                      NcPoly::monomial(2, word("aa")));
  CHECK(unit_inverse(TruncatedUnit::one(2, N)).is_identity());
  CHECK_THROWS_AS(TruncatedUnit(NcPoly::monomial(2, word("a")), N), std::invalid_argument);
  CHECK_THROWS(TruncatedUnit::one(2, N) * TruncatedUnit::one(2, TruncationDegree(4)));
  CHECK(TruncatedUnit(one_plus(2, "aab"), N).is_identity());
  CHECK(g.augmentation() == NcPoly::monomial(2, word("a")));
}

TEST_CASE("unit group laws") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t N = 2 + t % 5;
    const auto g = random_unit(rng, N), h = random_unit(rng, N);
    CHECK((g * unit_inverse(g)).is_identity());
    CHECK((unit_inverse(g) * g).is_identity());
    CHECK(unit_inverse(g * h).poly() == (unit_inverse(h) * unit_inverse(g)).poly());
    CHECK(group_commutator(g, g).is_identity());
  }
}

TEST_CASE("left_normalized_commutator") {
  const TruncationDegree N(3);
  const TruncatedUnit g(one_plus(2, "a"), N), h(one_plus(2, "b"), N);
  std::vector<TruncatedUnit> gs{g};
  CHECK(left_normalized_commutator(gs).poly() == g.poly());
  gs = {g, g};
  CHECK(left_normalized_commutator(gs).is_identity());
  gs = {g, h};
  CHECK(left_normalized_commutator(gs).poly() ==
        NcPoly::constant(2, 1) + NcPoly::monomial(2, word("ab")) - NcPoly::monomial(2, word("ba")));
  gs = {g, TruncatedUnit(one_plus(2, "b"), TruncationDegree(4))};
  CHECK_THROWS(left_normalized_commutator(gs));
  CHECK_THROWS(left_normalized_commutator(std::vector<TruncatedUnit>{}));
}

TEST_CASE("relation tuples cover every tuple up to relabelling") {
  for (std::size_t n : {3, 4}) {
    const auto tuples = relation_tuples(n);
    CHECK(tuples.size() == (n == 3 ? 4 : 18));
    const std::set<std::vector<std::size_t>> canon(tuples.begin(), tuples.end());
    CHECK(canon.size() == tuples.size());
    for (std::size_t k = 3; k <= n; ++k) {
      std::vector<std::size_t> t(k, 0);
      const std::size_t letters = n + 2;
      for (;;) {
        std::map<std::size_t, std::size_t> relabel;
        std::vector<std::size_t> c;
        for (auto x : t) c.push_back(relabel.emplace(x, relabel.size()).first->second);
        if (relabel.size() < k) CHECK(canon.count(c) == 1);
        std::size_t i = 0;
        while (i < k && ++t[i] == letters) t[i++] = 0;
        if (i == k) break;
      }
    }
  }
}

TEST_CASE("group relations hold in the family") {
  auto r = verify_group_relations(3, TruncationDegree(8), 500);
  CHECK(r.verified);
  CHECK(r.exhaustive);
  CHECK(r.tuples_checked == 4);
  r = verify_group_relations(4, TruncationDegree(8), 500);
  CHECK(r.verified);
  CHECK(r.tuples_checked == 18);
  r = verify_group_relations(4, TruncationDegree(6), 5);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.tuples_checked == 5);
  CHECK_THROWS_AS(verify_group_relations(2, TruncationDegree(8), 10), std::invalid_argument);

  // Relabelled tuples, checked directly without the symmetry reduction.
  const auto aut = family(3);
  const MonomialFilter keep = [&aut](const Word& w) { return aut.accepts(w); };
  std::vector<TruncatedUnit> gens;
  for (Letter i = 0; i < 5; ++i)
    gens.emplace_back(NcPoly::constant(5, 1) + NcPoly::monomial(5, Word{i}), TruncationDegree(8), keep);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      std::vector<TruncatedUnit> gs{gens[a], gens[b], gens[a]};
      CHECK(left_normalized_commutator(gs).is_identity());
    }
}

TEST_CASE("distinct generators do not commute") {
  const auto aut = family(3);
  const MonomialFilter keep = [&aut](const Word& w) { return aut.accepts(w); };
  const TruncatedUnit g(NcPoly::constant(5, 1) + NcPoly::monomial(5, Word{0}), TruncationDegree(8), keep);
  const TruncatedUnit h(NcPoly::constant(5, 1) + NcPoly::monomial(5, Word{1}), TruncationDegree(8), keep);
  CHECK_FALSE(group_commutator(g, h).is_identity());
  const std::vector<TruncatedUnit> gs{g, h};
  CHECK_FALSE(left_normalized_commutator(gs).is_identity());
}

TEST_CASE("reduced group words") {
  CHECK(reduced_group_words(1).size() == 4);
  CHECK(reduced_group_words(4).size() == 4 + 12 + 36 + 108);
  for (const auto& w : reduced_group_words(4))
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] != -w[i - 1]);
  CHECK(format_group_word({1, -2}) == "x y^-1");
}

TEST_CASE("free subgroup on the free algebra") {
  const auto aut = free_ab();
  const auto cert = single_letters(aut);
  const auto lead = verify_free_subgroup(aut, cert, 3, 6, ExpansionMethod::LeadingTerms);
  const auto full = verify_free_subgroup(aut, cert, 3, 6, ExpansionMethod::FullExpansion);
  CHECK(lead.verified);
  CHECK(full.verified);
  REQUIRE(lead.rows.size() == full.rows.size());
  for (std::size_t i = 0; i < lead.rows.size(); ++i) {
    CHECK(lead.rows[i].witness == full.rows[i].witness);
    CHECK(lead.rows[i].coefficient == full.rows[i].coefficient);
    CHECK(lead.rows[i].lowest_degree == full.rows[i].lowest_degree);
  }
  // x = 1 + b: the lowest component of x^k is k b.
  CHECK(lead.rows[0].witness == word("b"));
  CHECK(lead.rows[0].coefficient == 1);
  CHECK_THROWS_AS(verify_free_subgroup(aut, cert, 3, 4), TruncationTooSmall);
  CHECK(default_truncation(3, cert) == 5);
}

TEST_CASE("free subgroup is monotone in the word length") {
  const auto aut = family(2);
  const auto cert = find_regular_pair(aut);
  const auto r2 = verify_free_subgroup(aut, cert, 2);
  const auto r3 = verify_free_subgroup(aut, cert, 3);
  CHECK(r2.verified);
  CHECK(r3.verified);
  REQUIRE(r3.rows.size() > r2.rows.size());
  for (std::size_t i = 0; i < r2.rows.size(); ++i) CHECK(r2.rows[i].witness == r3.rows[i].witness);
}

TEST_CASE("free subgroup in A_5") {
  const auto aut = family(3);
  const auto cert = find_regular_pair(aut);
  const auto r = verify_free_subgroup(aut, cert, 4);
  CHECK(r.verified);
  CHECK(r.rows.size() == 160);
  CHECK(r.truncation == default_truncation(4, cert));
}
