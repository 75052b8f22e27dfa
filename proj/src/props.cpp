#include "freelie/props.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <tuple>

#include "freelie/errors.hpp"
#include "freelie/poly.hpp"
#include "freelie/regular.hpp"

namespace freelie {

namespace {

const Alphabet& letters() {
  static const Alphabet abc = Alphabet::of_chars("abcdefgh");
  return abc;
}

std::string show(const Word& w) { return w.empty() ? "ε" : letters().format(w); }

template <class... Ws>
std::string show_all(const Ws&... ws) {
  std::string s;
  ((s += (s.empty() ? "" : " ") + show(ws)), ...);
  return s;
}

using Check = std::optional<std::string>;

// Runs check(i) for i < n and folds the results, keeping case order.
template <class F>
PropertyResult run_cases(std::string name, std::size_t n, Execution execution, F&& check) {
  PropertyResult r;
  r.name = std::move(name);
  const auto outcomes = ordered_map(n, execution, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    return check(i);
  });
  for (const auto& [cases, failure] : outcomes) {
    r.cases += cases;
    if (failure) {
      ++r.failures;
      if (r.counterexamples.size() < kMaxReported) r.counterexamples.push_back(*failure);
    }
  }
  return r;
}

std::vector<Word> primitive_words(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<Word> out;
  for (auto& w : all_words(alphabet_size, 1, max_len))
    if (is_primitive(w)) out.push_back(std::move(w));
  return out;
}

bool is_factor(const Word& pat, const Word& text) { return text.contains(pat); }

bool gaps_divisible(const std::vector<std::size_t>& pos, std::size_t d) {
  for (std::size_t i = 1; i < pos.size(); ++i)
    if ((pos[i] - pos[0]) % d != 0) return false;
  return true;
}

// ---- overlap suite ----

PropertyResult overlap_lemma(Execution ex) {
  const auto words = all_words(2, 1, 12);
  return run_cases("overlap lemma", words.size(), ex, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    for (std::size_t m = 1; m <= 6; ++m)
      for (std::size_t n = 1; n <= 6; ++n)
        if (!check_overlap(m, n, words[i]))
          return {36, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " w=" + show(words[i])};
    return {36, std::nullopt};
  });
}

PropertyResult cyclic_conjugates(Execution ex) {
  const auto us = primitive_words(2, 5);
  return run_cases("cyclic conjugates", us.size() * 4, ex, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    const Word& u = us[i / 4];
    const std::size_t N = i % 4 + 1, len = N * u.size();
    const Word text = u.power(2 * N);
    for (std::size_t a = 0; a + len <= text.size(); ++a) {
      for (std::size_t b = a + 1; b + len <= text.size(); ++b) {
        const Word fa = text.substr(a, len), fb = text.substr(b, len);
        if (!is_cyclically_conjugate(fa, fb) || (fa == fb && (b - a) % u.size() != 0))
          return {1, "u=" + show(u) + " N=" + std::to_string(N) + " positions " + std::to_string(a) + "," +
                         std::to_string(b)};
      }
    }
    return {1, std::nullopt};
  });
}

PropertyResult occurrences_in_powers(Execution ex) {
  const auto us = primitive_words(2, 4);
  const auto vs = all_words(2, 1, 8);
  return run_cases("occurrences in powers", us.size(), ex, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    const Word& u = us[i];
    const Word window = u.power(6);
    std::size_t cases = 0;
    for (const auto& v : vs) {
      if (v.size() < u.size()) continue;
      ++cases;
      if (!gaps_divisible(occurrences_in_power(v, u, 6), u.size())) return {cases, "gap: " + show_all(u, v)};
      if (is_factor(v + v, window) &&
          (v.size() % u.size() != 0 || !is_cyclically_conjugate(v, u.power(v.size() / u.size()))))
        return {cases, "square not conjugate to a power: " + show_all(u, v)};
    }
    return {cases, std::nullopt};
  });
}

PropertyResult shift_equation(Execution ex) {
  const auto us = all_words(2, 1, 3);
  const auto Ws = all_words(2, 1, 6);
  return run_cases("shift equation", us.size(), ex, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    const Word& u = us[i];
    std::size_t cases = 0;
    for (const auto& W : Ws) {
      for (const auto& r : all_words(2, u.size(), u.size())) {
        ++cases;
        const std::string label = show_all(u, W, r);
        if (u + W != W + r) {
          try {
            shift_equation_decompose(u, W, r);
            return {cases, "accepted a non-solution: " + label};
          } catch (const EquationDoesNotHold&) {
          }
          continue;
        }
        const auto [n, p] = shift_equation_decompose(u, W, r);
        const Word uW = u + W;
        if (W != u.power(n) + p || p.size() >= u.size() || !u.starts_with(p) || r != u.rotated(p.size()) ||
            !u.power(uW.size() / u.size() + 1).starts_with(uW))
          return {cases, "bad decomposition: " + label};
      }
    }
    return {cases, std::nullopt};
  });
}

// ---- switching suite ----

struct PrimitivePair {
  Word u, v;
};

std::vector<PrimitivePair> switching_pairs() {
  const auto ps = primitive_words(2, 3);
  std::vector<PrimitivePair> out;
  for (const auto& u : ps)
    for (const auto& v : ps)
      if (u != v) out.push_back({u, v});
  return out;
}

PropertyResult period_switching(Execution ex, bool power_check) {
  const auto pairs = switching_pairs();
  return run_cases(power_check ? "switching product is primitive" : "period switching", pairs.size(), ex,
                   [&](std::size_t i) -> std::pair<std::size_t, Check> {
                     const auto& [u, v] = pairs[i];
                     std::size_t cases = 0;
                     for (std::size_t l = 1; l <= 6; ++l) {
                       for (std::size_t s = 1; s <= 6; ++s) {
                         if (l * v.size() <= 2 * u.size() || s * u.size() <= 2 * v.size()) continue;
                         ++cases;
                         const Word w = v.power(l) + u.power(s);
                         const std::string label = show_all(u, v) + " l=" + std::to_string(l) +
                                                   " s=" + std::to_string(s);
                         if (power_check) {
                           if (primitive_root(w).exponent != 1) return {cases, label};
                         } else {
                           const std::size_t K = 4 * (l + s);
                           if (is_factor(w, u.power(K)) || is_factor(w, v.power(K))) return {cases, label};
                         }
                       }
                     }
                     return {cases, std::nullopt};
                   });
}

PropertyResult switching_not_factor(Execution ex) {
  const auto pairs = switching_pairs();
  return run_cases("switched powers avoid the reverse product", pairs.size(), ex,
                   [&](std::size_t i) -> std::pair<std::size_t, Check> {
                     const auto& [u, v] = pairs[i];
                     std::size_t cases = 0;
                     for (std::size_t n = 1; n <= 5; ++n) {
                       for (std::size_t m = 1; m <= 5; ++m) {
                         if (n * u.size() <= 2 * v.size() || m * v.size() <= 2 * u.size()) continue;
                         const Word pattern = u.power(n) + v.power(m);
                         for (std::size_t p = 0; p <= 12; ++p) {
                           for (std::size_t q = 0; q <= 12; ++q) {
                             ++cases;
                             if (!factor_positions(pattern, v.power(p) + u.power(q)).empty())
                               return {cases, show_all(u, v) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                                  " p=" + std::to_string(p) + " q=" + std::to_string(q)};
                           }
                         }
                       }
                     }
                     return {cases, std::nullopt};
                   });
}

PropertyResult shift_power(Execution ex) {
  const auto pairs = switching_pairs();
  return run_cases("occurrences of u^k v^l are period-aligned", pairs.size(), ex,
                   [&](std::size_t i) -> std::pair<std::size_t, Check> {
                     const auto& [u, v] = pairs[i];
                     const std::size_t a = u.size(), b = v.size();
                     std::size_t cases = 0;
                     for (std::size_t k = 2; k <= 5; ++k) {
                       for (std::size_t l = 2; l <= 5; ++l) {
                         if ((k - 1) * a <= 2 * b || (k - 1) * b <= 2 * a || (l - 1) * b <= 2 * a) continue;
                         const Word S = u.power(k) + v.power(l);
                         for (std::size_t n = k + 1; n <= 6; ++n) {
                           for (std::size_t m = l + 1; m <= 6; ++m) {
                             ++cases;
                             const auto pos = factor_positions(S, (u.power(n) + v.power(m)).power(4));
                             if (!gaps_divisible(pos, n * a + m * b))
                               return {cases, show_all(u, v) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                                  " n=" + std::to_string(n) + " m=" + std::to_string(m)};
                           }
                         }
                       }
                     }
                     return {cases, std::nullopt};
                   });
}

PropertyResult power_products_not_conjugate(Execution ex) {
  const auto pairs = switching_pairs();
  return run_cases("distinct power products are not conjugate", pairs.size(), ex,
                   [&](std::size_t i) -> std::pair<std::size_t, Check> {
                     const auto& [u, v] = pairs[i];
                     std::size_t cases = 0;
                     for (std::size_t n = 1; n <= 6; ++n) {
                       if (n * u.size() <= 2 * v.size() || n * v.size() <= 2 * u.size()) continue;
                       for (std::size_t k1 = n; k1 <= 6; ++k1)
                         for (std::size_t l1 = n; l1 <= 6; ++l1)
                           for (std::size_t k2 = n; k2 <= 6; ++k2)
                             for (std::size_t l2 = n; l2 <= 6; ++l2) {
                               if (k1 == k2 && l1 == l2) continue;
                               ++cases;
                               if (is_cyclically_conjugate(u.power(k1) + v.power(l1), u.power(k2) + v.power(l2)))
                                 return {cases, show_all(u, v) + " (" + std::to_string(k1) + "," + std::to_string(l1) +
                                                    ") (" + std::to_string(k2) + "," + std::to_string(l2) + ")"};
                             }
                     }
                     return {cases, std::nullopt};
                   });
}

// ---- regular suite ----

PropertyResult regular_is_primitive(Execution ex) {
  const auto words = all_words(2, 1, 10);
  return run_cases("regular words are primitive", words.size(), ex, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    if (is_regular(words[i]) && !is_primitive(words[i])) return {1, show(words[i])};
    return {1, std::nullopt};
  });
}

PropertyResult unique_regular_rotation(Execution ex) {
  const auto words = primitive_words(2, 10);
  return run_cases("one regular rotation", words.size(), ex, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    const Word& w = words[i];
    std::size_t regular = 0;
    for (std::size_t s = 0; s < w.size(); ++s) regular += is_regular(w.rotated(s));
    if (regular != 1) return {1, show(w)};
    return {1, std::nullopt};
  });
}

UfnOutcome flip(UfnOutcome o) {
  if (o == UfnOutcome::Greater) return UfnOutcome::Less;
  if (o == UfnOutcome::Less) return UfnOutcome::Greater;
  return o;
}

bool at_least(const Word& f, const Word& g) { return ufn_compare(f, g) != UfnOutcome::Less; }

UfnOutcome superword_compare(const Word& f, const Word& g) {
  const std::size_t n = f.size() + g.size();
  const Word a = f.power(n / f.size() + 1).prefix(n), b = g.power(n / g.size() + 1).prefix(n);
  if (a == b) return UfnOutcome::Equivalent;
  return a > b ? UfnOutcome::Greater : UfnOutcome::Less;
}

// True when the triple violates one of the preorder laws.
bool preorder_fails(const Word& f, const Word& g, const Word& h) {
  if (f.empty() || g.empty() || h.empty()) return false;
  const Word* ws[] = {&f, &g, &h};
  for (const Word* x : ws) {
    for (const Word* y : ws) {
      const auto o = ufn_compare(*x, *y);
      if (o != flip(ufn_compare(*y, *x))) return true;
      if ((o == UfnOutcome::Equivalent) != (primitive_root(*x).root == primitive_root(*y).root)) return true;
      if (o != superword_compare(*x, *y)) return true;
      for (const Word* z : ws)
        if (at_least(*x, *y) && at_least(*y, *z) && !at_least(*x, *z)) return true;
    }
  }
  return false;
}

PropertyResult ufn_total_preorder(std::uint64_t seed, Execution ex) {
  constexpr std::size_t kSamples = 10000;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, 6);
  std::uniform_int_distribution<int> letter(0, 1);
  std::vector<std::array<Word, 3>> triples(kSamples);
  for (auto& t : triples)
    for (auto& w : t) {
      const std::size_t len = length(rng);
      for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(letter(rng)));
    }
  return run_cases("ufn order is a total preorder", kSamples, ex, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    auto t = triples[i];
    if (!preorder_fails(t[0], t[1], t[2])) return {1, std::nullopt};
    for (std::size_t j = 0; j < 3; ++j)
      t[j] = shrink_word(t[j], [&](const Word& w) {
        auto s = t;
        s[j] = w;
        return preorder_fails(s[0], s[1], s[2]);
      });
    return {1, show_all(t[0], t[1], t[2])};
  });
}

PropertyResult lex_implies_ufn(Execution ex) {
  const auto words = all_words(2, 1, 6);
  return run_cases("lex order implies ufn order", words.size(), ex, [&](std::size_t i) -> std::pair<std::size_t, Check> {
    for (const auto& g : words)
      if (lex_compare(words[i], g) == LexOutcome::Greater && ufn_compare(words[i], g) != UfnOutcome::Greater)
        return {words.size(), show_all(words[i], g)};
    return {words.size(), std::nullopt};
  });
}

std::vector<PrimitivePair> ordered_semi_regular_pairs() {
  std::vector<Word> semi;
  for (auto& w : all_words(2, 1, 3))
    if (classify_regularity(w).semi_regular()) semi.push_back(std::move(w));
  std::vector<PrimitivePair> out;
  for (const auto& u : semi)
    for (const auto& v : semi)
      if (ufn_compare(u, v) == UfnOutcome::Greater) out.push_back({u, v});
  return out;
}

PropertyResult power_product_order(Execution ex) {
  const auto pairs = ordered_semi_regular_pairs();
  return run_cases("power products ordered by the first exponent", pairs.size(), ex,
                   [&](std::size_t i) -> std::pair<std::size_t, Check> {
                     const auto& [u, v] = pairs[i];
                     const auto ok = [&](std::size_t k, std::size_t l) {
                       return k * u.size() > 2 * v.size() && l * v.size() > 2 * u.size();
                     };
                     std::size_t cases = 0;
                     for (std::size_t k1 = 2; k1 <= 5; ++k1)
                       for (std::size_t l1 = 2; l1 <= 5; ++l1)
                         for (std::size_t k2 = 2; k2 < k1; ++k2)
                           for (std::size_t l2 = 2; l2 <= 5; ++l2) {
                             if (!ok(k1, l1) || !ok(k2, l2)) continue;
                             ++cases;
                             if (ufn_compare(u.power(k1) + v.power(l1), u.power(k2) + v.power(l2)) != UfnOutcome::Greater)
                               return {cases, show_all(u, v) + " (" + std::to_string(k1) + "," + std::to_string(l1) +
                                                  ") (" + std::to_string(k2) + "," + std::to_string(l2) + ")"};
                           }
                     return {cases, std::nullopt};
                   });
}

PropertyResult large_power_products_not_conjugate(Execution ex) {
  const auto ps = primitive_words(2, 3);
  std::vector<PrimitivePair> pairs;
  for (const auto& u : ps)
    for (const auto& d : ps)
      if (!is_cyclically_conjugate(u, d) && ufn_compare(u, d) == UfnOutcome::Greater) pairs.push_back({u, d});
  return run_cases("large power products are not conjugate", pairs.size(), ex,
                   [&](std::size_t i) -> std::pair<std::size_t, Check> {
                     const auto& [u, d] = pairs[i];
                     const std::size_t k0 = d.size() + 1, l0 = u.size() + 1;
                     std::size_t cases = 0;
                     for (std::size_t k1 = k0; k1 < k0 + 3; ++k1)
                       for (std::size_t l1 = l0; l1 < l0 + 3; ++l1)
                         for (std::size_t k2 = k0; k2 < k0 + 3; ++k2)
                           for (std::size_t l2 = l0; l2 < l0 + 3; ++l2) {
                             if (k1 == k2 && l1 == l2) continue;
                             ++cases;
                             if (is_cyclically_conjugate(u.power(k1) + d.power(l1), u.power(k2) + d.power(l2)))
                               return {cases, show_all(u, d) + " (" + std::to_string(k1) + "," + std::to_string(l1) +
                                                  ") (" + std::to_string(k2) + "," + std::to_string(l2) + ")"};
                           }
                     return {cases, std::nullopt};
                   });
}

PropertyResult substitution_regularity(Execution ex) {
  const auto hall = enumerate_regular(2, 4);
  std::vector<PrimitivePair> pairs;
  for (const auto& u : hall)
    for (const auto& v : hall)
      if (ufn_compare(u, v) == UfnOutcome::Greater) pairs.push_back({u, v});
  return run_cases("substitution keeps regularity", pairs.size(), ex,
                   [&](std::size_t i) -> std::pair<std::size_t, Check> {
                     const auto& [u, v] = pairs[i];
                     for (const auto& w : hall)
                       if (!is_regular(substitute(w, u, v)))
                         return {hall.size(), "W=" + hall_alphabet().format(w) + " " + show_all(u, v)};
                     return {hall.size(), std::nullopt};
                   });
}

// ---- bracketing suite ----

PropertyResult highest_term_law(std::size_t alphabet_size, std::size_t max_len, Execution ex) {
  const auto words = enumerate_regular(alphabet_size, max_len);
  return run_cases("highest term of [u], " + std::to_string(alphabet_size) + " letters", words.size(), ex,
                   [&](std::size_t i) -> std::pair<std::size_t, Check> {
                     const auto lead = leading_monomial(expand_bracket(standard_bracketing(words[i]), alphabet_size));
                     if (lead.monomial != words[i] || lead.coefficient != 1) return {1, show(words[i])};
                     return {1, std::nullopt};
                   });
}

void append(SuiteReport& r, Suite s, std::uint64_t seed, Execution ex) {
  auto& p = r.properties;
  switch (s) {
    case Suite::Overlap:
      p.push_back(overlap_lemma(ex));
      p.push_back(cyclic_conjugates(ex));
      p.push_back(occurrences_in_powers(ex));
      p.push_back(shift_equation(ex));
      break;
    case Suite::Switching:
      p.push_back(period_switching(ex, false));
      p.push_back(period_switching(ex, true));
      p.push_back(switching_not_factor(ex));
      p.push_back(shift_power(ex));
      p.push_back(power_products_not_conjugate(ex));
      break;
    case Suite::Regular:
      p.push_back(regular_is_primitive(ex));
      p.push_back(unique_regular_rotation(ex));
      p.push_back(ufn_total_preorder(seed, ex));
      p.push_back(lex_implies_ufn(ex));
      p.push_back(power_product_order(ex));
      p.push_back(large_power_products_not_conjugate(ex));
      p.push_back(substitution_regularity(ex));
      break;
    case Suite::Bracketing:
      p.push_back(highest_term_law(2, 8, ex));
      p.push_back(highest_term_law(3, 6, ex));
      break;
    case Suite::All:
      for (Suite t : {Suite::Overlap, Suite::Switching, Suite::Regular, Suite::Bracketing}) append(r, t, seed, ex);
      break;
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Overlap, Suite::Switching, Suite::Regular, Suite::Bracketing, Suite::All})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Overlap: return "overlap";
    case Suite::Switching: return "switching";
    case Suite::Regular: return "regular";
    case Suite::Bracketing: return "bracketing";
    case Suite::All: return "all";
  }
  return "all";
}

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.failures == 0; });
}

SuiteReport run_suite(Suite suite, std::uint64_t seed, Execution execution) {
  SuiteReport r;
  r.suite = suite;
  r.seed = seed;
  append(r, suite, seed, execution);
  return r;
}

Word shrink_word(Word w, const std::function<bool(const Word&)>& still_fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word shorter = w.prefix(i) + w.substr(i + 1);
      if (still_fails(shorter)) {
        w = std::move(shorter);
        progress = true;
        break;
      }
    }
  }
  for (bool progress = true; progress && !w.empty();) {
    progress = false;
    Letter top = 0;
    for (std::size_t i = 0; i < w.size(); ++i) top = std::max(top, w[i]);
    for (Letter target = 0; target < top; ++target) {
      std::string s = w.str();
      std::replace(s.begin(), s.end(), static_cast<char>(top), static_cast<char>(target));
      Word merged(std::move(s));
      if (still_fails(merged)) {
        w = std::move(merged);
        progress = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace freelie
