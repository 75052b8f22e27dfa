#include "freelie/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "freelie/automaton.hpp"
#include "freelie/errors.hpp"

namespace freelie {

namespace {

// Length first, then lex; the order used for leading terms.
bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void require_same_alphabet(const NcPoly& p, const NcPoly& q) {
  if (p.alphabet_size() != q.alphabet_size()) throw AlphabetMismatch("polynomials over different alphabets");
}

}  // namespace

NcPoly NcPoly::monomial(std::size_t alphabet_size, const Word& w, const Integer& c) {
  NcPoly p(alphabet_size);
  p.add_term(w, c);
  return p;
}

NcPoly NcPoly::constant(std::size_t alphabet_size, const Integer& c) { return monomial(alphabet_size, Word{}, c); }

Integer NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t NcPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

std::size_t NcPoly::min_degree() const {
  if (terms_.empty()) return 0;
  std::size_t d = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_) d = std::min(d, w.size());
  return d;
}

NcPoly& NcPoly::operator+=(const NcPoly& q) {
  require_same_alphabet(*this, q);
  for (const auto& [w, c] : q.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& q) {
  require_same_alphabet(*this, q);
  for (const auto& [w, c] : q.terms_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly out(alphabet_size_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

std::string NcPoly::format(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return shortlex_less(b->first, a->first); });
  std::string out;
  bool first = true;
  for (const auto* t : ordered) {
    Integer c = t->second;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    first = false;
    const bool unit_monomial = t->first.empty();
    if (c != 1 || unit_monomial) out += c.str();
    if (!unit_monomial) out += alphabet.format(t->first);
  }
  return out;
}

NcPoly multiply(const NcPoly& p, const NcPoly& q, const MonomialFilter& keep) {
  require_same_alphabet(p, q);
  NcPoly out(p.alphabet_size());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      Word ab = a + b;
      if (keep && !keep(ab)) continue;
      out.add_term(ab, ca * cb);
    }
  }
  return out;
}

NcPoly multiply(const NcPoly& p, const NcPoly& q) { return multiply(p, q, MonomialFilter{}); }

NcPoly operator*(const NcPoly& p, const NcPoly& q) { return multiply(p, q); }

NcPoly lie_bracket(const NcPoly& p, const NcPoly& q, const MonomialFilter& keep) {
  return multiply(p, q, keep) - multiply(q, p, keep);
}

NcPoly lie_bracket(const NcPoly& p, const NcPoly& q) { return lie_bracket(p, q, MonomialFilter{}); }

NcPoly expand_bracket(const BracketTree& t, const std::function<NcPoly(Letter)>& leaf_image,
                      const MonomialFilter& keep) {
  if (t.is_leaf()) return leaf_image(t.letter());
  return lie_bracket(expand_bracket(t.left(), leaf_image, keep), expand_bracket(t.right(), leaf_image, keep), keep);
}

NcPoly expand_bracket(const BracketTree& t, std::size_t alphabet_size) {
  return expand_bracket(
      t, [alphabet_size](Letter x) { return NcPoly::monomial(alphabet_size, Word{x}); }, MonomialFilter{});
}

LeadingTerm leading_monomial(const NcPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("leading_monomial of zero");
  const auto* best = &*p.terms().begin();
  for (const auto& t : p.terms())
    if (shortlex_less(best->first, t.first)) best = &t;
  return {best->first, best->second};
}

LeadingTerm lowest_monomial(const NcPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("lowest_monomial of zero");
  const auto* best = &*p.terms().begin();
  for (const auto& t : p.terms()) {
    const auto& w = t.first;
    if (w.size() < best->first.size() || (w.size() == best->first.size() && w > best->first)) best = &t;
  }
  return {best->first, best->second};
}

NcPoly reduce_mod_ideal(const NcPoly& p, const UfnAutomaton& aut) {
  if (p.alphabet_size() != aut.alphabet().size()) throw AlphabetMismatch("reduce_mod_ideal: alphabet sizes differ");
  NcPoly out(p.alphabet_size());
  for (const auto& [w, c] : p.terms())
    if (aut.accepts(w)) out.add_term(w, c);
  return out;
}

TruncationDegree::TruncationDegree(std::size_t n) : value(n) {
  if (n == 0) throw std::invalid_argument("truncation degree must be >= 1");
}

NcPoly truncate(const NcPoly& p, TruncationDegree N) {
  NcPoly out(p.alphabet_size());
  for (const auto& [w, c] : p.terms())
    if (w.size() < N.value) out.add_term(w, c);
  return out;
}

}  // namespace freelie
