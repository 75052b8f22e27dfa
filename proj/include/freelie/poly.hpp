#ifndef FREELIE_POLY_HPP
#define FREELIE_POLY_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "freelie/regular.hpp"
#include "freelie/word.hpp"

namespace freelie {

using Integer = boost::multiprecision::cpp_int;

class UfnAutomaton;

// Exact noncommutative polynomial with integer coefficients, stored sparsely
// as monomial -> coefficient. Zero coefficients are never stored.
class NcPoly {
 public:
  using Terms = std::map<Word, Integer>;

  explicit NcPoly(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}

  static NcPoly monomial(std::size_t alphabet_size, const Word& w, const Integer& c = 1);
  static NcPoly constant(std::size_t alphabet_size, const Integer& c);

  std::size_t alphabet_size() const { return alphabet_size_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(const Word& w) const;

  void add_term(const Word& w, const Integer& c);

  // Highest / lowest monomial length; 0 for the zero polynomial.
  std::size_t degree() const;
  std::size_t min_degree() const;

  NcPoly& operator+=(const NcPoly& q);
  NcPoly& operator-=(const NcPoly& q);
  NcPoly operator-() const;
  friend NcPoly operator+(NcPoly p, const NcPoly& q) { return p += q; }
  friend NcPoly operator-(NcPoly p, const NcPoly& q) { return p -= q; }

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  // "x1x2 - 2x2x1 + 1", terms in decreasing length-then-lex order.
  std::string format(const Alphabet& alphabet) const;

 private:
  std::size_t alphabet_size_;
  Terms terms_;
};

// Keeps a term iff the predicate holds for its monomial. Products computed
// with a filter drop rejected monomials before accumulating them.
using MonomialFilter = std::function<bool(const Word&)>;

NcPoly multiply(const NcPoly& p, const NcPoly& q);
NcPoly multiply(const NcPoly& p, const NcPoly& q, const MonomialFilter& keep);
NcPoly operator*(const NcPoly& p, const NcPoly& q);

NcPoly lie_bracket(const NcPoly& p, const NcPoly& q);
NcPoly lie_bracket(const NcPoly& p, const NcPoly& q, const MonomialFilter& keep);

// Opens every bracket: Leaf(x) -> x, Node(l, r) -> [expand(l), expand(r)].
NcPoly expand_bracket(const BracketTree& t, std::size_t alphabet_size);

// Same, with each leaf replaced by an arbitrary polynomial and every
// intermediate product filtered. Valid whenever the filter describes a
// quotient by a monomial ideal.
NcPoly expand_bracket(const BracketTree& t, const std::function<NcPoly(Letter)>& leaf_image,
                      const MonomialFilter& keep);

struct LeadingTerm {
  Word monomial;
  Integer coefficient;
};

// Greatest monomial in length-then-lex order. Throws ZeroPolynomial.
LeadingTerm leading_monomial(const NcPoly& p);

// Among the monomials of minimal length, the lex-greatest one.
LeadingTerm lowest_monomial(const NcPoly& p);

// Drops every term whose monomial is zero in the monomial algebra presented
// by the automaton.
NcPoly reduce_mod_ideal(const NcPoly& p, const UfnAutomaton& aut);

struct TruncationDegree {
  std::size_t value;

  explicit TruncationDegree(std::size_t n);
  friend bool operator==(TruncationDegree, TruncationDegree) = default;
};

// Drops all terms of length >= N.
NcPoly truncate(const NcPoly& p, TruncationDegree N);

}  // namespace freelie

#endif  // FREELIE_POLY_HPP
