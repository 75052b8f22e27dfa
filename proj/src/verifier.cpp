#include "freelie/verifier.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "freelie/errors.hpp"
#include "freelie/regular.hpp"

namespace freelie {

namespace {

NcPoly generator_image(const UfnAutomaton& aut, const BracketTree& t) {
  return reduce_mod_ideal(expand_bracket(t, aut.alphabet().size()), aut);
}

// Empty string when the reduced image of the generator has leading term (w, 1).
std::string check_generator(const NcPoly& image, const Word& w, const char* label) {
  if (image.is_zero()) return std::string("image of [") + label + "] vanishes";
  const auto lead = leading_monomial(image);
  if (lead.monomial != w || lead.coefficient != 1)
    return std::string("leading term of [") + label + "] is not (" + label + ", 1)";
  return {};
}

// Product with every monomial of length >= N or rejected by keep dropped.
NcPoly truncated_product(const NcPoly& p, const NcPoly& q, std::size_t N, const MonomialFilter& keep) {
  NcPoly out(p.alphabet_size());
  for (const auto& [a, ca] : p.terms()) {
    if (a.size() >= N) continue;
    for (const auto& [b, cb] : q.terms()) {
      if (a.size() + b.size() >= N) continue;
      Word ab = a + b;
      if (keep && !keep(ab)) continue;
      out.add_term(ab, ca * cb);
    }
  }
  return out;
}

std::optional<LeadingTerm> leading_by_expansion(const UfnAutomaton& aut, const BracketTree& tree, const NcPoly& pu,
                                                const NcPoly& pv) {
  const auto keep = [&aut](const Word& w) { return aut.accepts(w); };
  const NcPoly image = expand_bracket(tree, [&](Letter x) { return x == kHallA ? pu : pv; }, keep);
  if (image.is_zero()) return std::nullopt;
  return leading_monomial(image);
}

// Largest X(u, v) over the terms of a polynomial in {B, A}; nullopt when two
// monomials collide, which would make the shortcut unsound.
std::optional<LeadingTerm> leading_by_substitution(const NcPoly& hall_poly, const Word& u, const Word& v) {
  std::map<Word, Integer> images;
  for (const auto& [X, c] : hall_poly.terms())
    if (!images.emplace(substitute(X, u, v), c).second) return std::nullopt;
  if (images.empty()) return std::nullopt;
  const auto& top = *images.rbegin();
  return LeadingTerm{top.first, top.second};
}

}  // namespace

LieFreenessReport verify_lie_freeness(const UfnAutomaton& aut, const FreePairCertificate& cert, std::size_t d,
                                      ExpansionMethod method, Execution execution) {
  if (d == 0) throw std::invalid_argument("verify_lie_freeness: d must be >= 1");
  validate_certificate(aut, cert);

  LieFreenessReport report;
  report.degree = d;
  report.method = method;

  const NcPoly pu = generator_image(aut, cert.bracket_u);
  const NcPoly pv = generator_image(aut, cert.bracket_v);
  for (const auto& failure : {check_generator(pu, cert.u, "u"), check_generator(pv, cert.v, "v")}) {
    if (!failure.empty()) {
      report.failure = failure;
      return report;
    }
  }

  auto hall = enumerate_regular(2, d);
  std::stable_sort(hall.begin(), hall.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });

  report.rows = ordered_map(hall.size(), execution, [&](std::size_t i) {
    HallRow row;
    row.hall_word = hall[i];
    row.substituted = substitute(hall[i], cert.u, cert.v);
    row.accepted = aut.run(cert.base_vertex, row.substituted) != kDead;
    const BracketTree tree = standard_bracketing(hall[i]);
    if (method == ExpansionMethod::LeadingTerms) {
      auto lead = leading_by_substitution(expand_bracket(tree, 2), cert.u, cert.v);
      if (lead && aut.accepts(lead->monomial)) {
        row.leading = std::move(lead);
        return row;
      }
    }
    row.leading = leading_by_expansion(aut, tree, pu, pv);
    return row;
  });

  std::set<Word> seen;
  const Alphabet hall_letters = hall_alphabet();
  for (const auto& row : report.rows) {
    const std::string W = hall_letters.format(row.hall_word);
    if (!row.accepted) {
      report.failure = "W = " + W + ": substituted word is not accepted from the base vertex";
    } else if (!seen.insert(row.substituted).second) {
      report.failure = "W = " + W + ": substituted word repeats";
    } else if (!row.leading) {
      report.failure = "W = " + W + ": image vanishes in the algebra";
    } else if (row.leading->monomial != row.substituted) {
      report.failure = "W = " + W + ": leading monomial differs from the substituted word";
    }
    if (!report.failure.empty()) return report;
  }
  report.verified = true;
  return report;
}

TruncatedUnit::TruncatedUnit(NcPoly poly, TruncationDegree N, MonomialFilter keep)
    : poly_(poly.alphabet_size()), degree_(N), keep_(std::move(keep)) {
  if (poly.coefficient(Word{}) != 1) throw std::invalid_argument("TruncatedUnit: constant term must be 1");
  for (const auto& [w, c] : poly.terms())
    if (w.size() < N.value && (w.empty() || !keep_ || keep_(w))) poly_.add_term(w, c);
}

TruncatedUnit TruncatedUnit::one(std::size_t alphabet_size, TruncationDegree N, MonomialFilter keep) {
  return TruncatedUnit(NcPoly::constant(alphabet_size, 1), N, std::move(keep));
}

bool TruncatedUnit::is_identity() const { return poly_.term_count() == 1; }

NcPoly TruncatedUnit::augmentation() const { return poly_ - NcPoly::constant(poly_.alphabet_size(), 1); }

TruncatedUnit operator*(const TruncatedUnit& a, const TruncatedUnit& b) {
  if (!(a.degree_ == b.degree_)) throw std::invalid_argument("TruncatedUnit: mismatched truncation degrees");
  if (a.poly_.alphabet_size() != b.poly_.alphabet_size()) throw AlphabetMismatch("TruncatedUnit: alphabet mismatch");
  return TruncatedUnit(truncated_product(a.poly_, b.poly_, a.degree_.value, a.keep_), a.degree_, a.keep_);
}

TruncatedUnit unit_inverse(const TruncatedUnit& g) {
  const std::size_t N = g.degree().value;
  const NcPoly minus_x = -g.augmentation();
  NcPoly sum = NcPoly::constant(minus_x.alphabet_size(), 1);
  NcPoly power = sum;
  for (std::size_t i = 1; i < N; ++i) {
    power = truncated_product(power, minus_x, N, g.filter());
    if (power.is_zero()) break;
    sum += power;
  }
  return TruncatedUnit(std::move(sum), g.degree(), g.filter());
}

TruncatedUnit group_commutator(const TruncatedUnit& a, const TruncatedUnit& b) {
  return unit_inverse(a) * unit_inverse(b) * a * b;
}

TruncatedUnit left_normalized_commutator(std::span<const TruncatedUnit> gs) {
  if (gs.empty()) throw std::invalid_argument("left_normalized_commutator: empty list");
  for (const auto& g : gs)
    if (!(g.degree() == gs[0].degree()))
      throw std::invalid_argument("left_normalized_commutator: mismatched truncation degrees");
  TruncatedUnit acc = gs[0];
  for (std::size_t i = 1; i < gs.size(); ++i) acc = group_commutator(acc, gs[i]);
  return acc;
}

std::vector<std::vector<std::size_t>> relation_tuples(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 3; k <= n; ++k) {
    // Restricted growth strings: t[0] = 0, t[i] <= 1 + max(t[0..i-1]).
    std::vector<std::size_t> t(k, 0);
    const auto recurse = [&](auto&& self, std::size_t pos, std::size_t blocks) -> void {
      if (pos == k) {
        if (blocks < k) out.push_back(t);
        return;
      }
      for (std::size_t x = 0; x <= blocks && x < n + 2; ++x) {
        t[pos] = x;
        self(self, pos + 1, std::max(blocks, x + 1));
      }
    };
    recurse(recurse, 0, 0);
  }
  return out;
}

GroupRelationsReport verify_group_relations(std::size_t n, TruncationDegree N, std::size_t cap, Execution execution) {
  if (n < 3) throw std::invalid_argument("verify_group_relations: n must be >= 3");
  if (cap == 0) throw std::invalid_argument("verify_group_relations: cap must be positive");
  const auto aut = std::make_shared<const UfnAutomaton>(build_automaton(normalize_presentation(family_A(n))));
  const std::size_t letters = aut->alphabet().size();
  const MonomialFilter keep = [aut](const Word& w) { return aut->accepts(w); };

  std::vector<TruncatedUnit> gens;
  for (std::size_t i = 0; i < letters; ++i)
    gens.emplace_back(NcPoly::constant(letters, 1) + NcPoly::monomial(letters, Word{static_cast<Letter>(i)}), N, keep);

  auto tuples = relation_tuples(n);
  GroupRelationsReport report;
  report.n = n;
  report.truncation = N.value;
  if (tuples.size() > cap) {
    tuples.resize(cap);
    report.exhaustive = false;
  }
  report.tuples_checked = tuples.size();

  const auto holds = ordered_map(tuples.size(), execution, [&](std::size_t i) {
    std::vector<TruncatedUnit> gs;
    for (std::size_t x : tuples[i]) gs.push_back(gens[x]);
    return static_cast<char>(left_normalized_commutator(gs).is_identity());
  });
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (!holds[i]) {
      report.failing_tuple = tuples[i];
      return report;
    }
  }
  report.verified = true;
  return report;
}

std::vector<GroupWord> reduced_group_words(std::size_t L) {
  static constexpr int kLetters[] = {1, -1, 2, -2};
  std::vector<GroupWord> out;
  std::vector<GroupWord> layer{GroupWord{}};
  for (std::size_t len = 1; len <= L; ++len) {
    std::vector<GroupWord> next;
    for (const auto& w : layer) {
      for (int x : kLetters) {
        if (!w.empty() && w.back() == -x) continue;
        GroupWord e = w;
        e.push_back(x);
        next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string format_group_word(const GroupWord& w) {
  std::string s;
  for (int x : w) {
    if (!s.empty()) s += ' ';
    s += (x == 1 || x == -1) ? "x" : "y";
    if (x < 0) s += "^-1";
  }
  return s;
}

namespace {

TruncatedUnit evaluate(const GroupWord& R, const TruncatedUnit& g, const TruncatedUnit& h) {
  const TruncatedUnit g_inv = unit_inverse(g), h_inv = unit_inverse(h);
  TruncatedUnit acc = TruncatedUnit::one(g.poly().alphabet_size(), g.degree(), g.filter());
  for (int x : R) {
    switch (x) {
      case 1: acc = acc * g; break;
      case -1: acc = acc * g_inv; break;
      case 2: acc = acc * h; break;
      default: acc = acc * h_inv; break;
    }
  }
  return acc;
}

std::size_t weighted_degree(const Word& X, std::size_t wa, std::size_t wb) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < X.size(); ++i) d += X[i] == kHallA ? wa : wb;
  return d;
}

// R(1 + A, 1 + B) - 1 in the free algebra on {B, A}, keeping only monomials
// whose image under A -> u, B -> v is shorter than N. The lowest weighted
// component maps onto the lowest component of R(g, h) - 1.
std::optional<GroupWordRow> row_by_substitution(const UfnAutomaton& aut, const FreePairCertificate& cert,
                                                const GroupWord& R, std::size_t N) {
  const std::size_t wa = cert.u.size(), wb = cert.v.size();
  const MonomialFilter keep = [=](const Word& X) { return weighted_degree(X, wa, wb) < N; };
  const TruncationDegree degree(N);
  const auto one = NcPoly::constant(2, 1);
  const TruncatedUnit x(one + NcPoly::monomial(2, Word{kHallA}), degree, keep);
  const TruncatedUnit y(one + NcPoly::monomial(2, Word{kHallB}), degree, keep);
  const NcPoly E = evaluate(R, x, y).augmentation();
  if (E.is_zero()) return std::nullopt;

  std::size_t D = N;
  for (const auto& [X, c] : E.terms()) D = std::min(D, weighted_degree(X, wa, wb));
  std::map<Word, Integer> images;
  for (const auto& [X, c] : E.terms())
    if (weighted_degree(X, wa, wb) == D && !images.emplace(substitute(X, cert.u, cert.v), c).second)
      return std::nullopt;
  const auto& top = *images.rbegin();
  if (!aut.accepts(top.first)) return std::nullopt;
  return GroupWordRow{R, D, top.first, top.second};
}

std::optional<GroupWordRow> row_by_expansion(const GroupWord& R, const TruncatedUnit& g, const TruncatedUnit& h) {
  const NcPoly E = evaluate(R, g, h).augmentation();
  if (E.is_zero()) return std::nullopt;
  auto low = lowest_monomial(E);
  return GroupWordRow{R, low.monomial.size(), std::move(low.monomial), std::move(low.coefficient)};
}

}  // namespace

FreeSubgroupReport verify_free_subgroup(const UfnAutomaton& aut, const FreePairCertificate& cert, std::size_t L,
                                        std::optional<std::size_t> N, ExpansionMethod method, Execution execution) {
  if (L == 0) throw std::invalid_argument("verify_free_subgroup: L must be >= 1");
  validate_certificate(aut, cert);
  const std::size_t bound = L * std::max(cert.u.size(), cert.v.size()) + 1;
  const std::size_t truncation = N.value_or(bound + 1);
  if (truncation <= bound)
    throw TruncationTooSmall("verify_free_subgroup: N = " + std::to_string(truncation) + " must exceed " +
                             std::to_string(bound));

  FreeSubgroupReport report;
  report.max_word_length = L;
  report.truncation = truncation;
  report.method = method;

  const NcPoly pu = generator_image(aut, cert.bracket_u);
  const NcPoly pv = generator_image(aut, cert.bracket_v);
  for (const auto& failure : {check_generator(pu, cert.u, "u"), check_generator(pv, cert.v, "v")}) {
    if (!failure.empty()) {
      report.failure = failure;
      return report;
    }
  }

  const std::size_t letters = aut.alphabet().size();
  const MonomialFilter keep = [&aut](const Word& w) { return aut.accepts(w); };
  const auto one = NcPoly::constant(letters, 1);
  const TruncationDegree degree(truncation);
  const TruncatedUnit g(one + pu, degree, keep), h(one + pv, degree, keep);

  const auto words = reduced_group_words(L);
  const auto rows = ordered_map(words.size(), execution, [&](std::size_t i) -> std::optional<GroupWordRow> {
    if (method == ExpansionMethod::LeadingTerms)
      if (auto row = row_by_substitution(aut, cert, words[i], truncation)) return row;
    return row_by_expansion(words[i], g, h);
  });

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i]) {
      report.failure = "word vanishes: " + format_group_word(words[i]);
      return report;
    }
    report.rows.push_back(*rows[i]);
  }
  report.verified = true;
  return report;
}

}  // namespace freelie
