#ifndef FREELIE_VERIFIER_HPP
#define FREELIE_VERIFIER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freelie/automaton.hpp"
#include "freelie/free_finder.hpp"
#include "freelie/parallel.hpp"
#include "freelie/poly.hpp"

namespace freelie {

// How the image of a bracket / group word is evaluated.
//
// FullExpansion opens every bracket in the monomial algebra and reads the
// leading (or lowest) monomial off the resulting polynomial. It is the
// reference path and is only affordable for short certificates.
//
// LeadingTerms expands in the free algebra on {A, B} first. Both [u] and [v]
// are homogeneous with leading term (u, 1) and (v, 1) (checked by full
// expansion of the two generators), lex order on words of one length is
// multiplicative, and {u, v} is a code, so the leading monomial of
// sum c_X X([u], [v]) is the largest X(u, v) with c_X != 0 provided that word
// is nonzero in the algebra. Every one of those side conditions is checked;
// a row that fails one falls back to FullExpansion.
enum class ExpansionMethod { LeadingTerms, FullExpansion };

struct HallRow {
  Word hall_word;    // regular word over {B ≺ A}
  Word substituted;  // hall_word with A -> u, B -> v
  bool accepted = false;
  std::optional<LeadingTerm> leading;  // leading monomial of the reduced image
};

struct LieFreenessReport {
  std::size_t degree = 0;
  ExpansionMethod method = ExpansionMethod::LeadingTerms;
  std::vector<HallRow> rows;
  bool verified = false;
  std::string failure;  // first failed check when !verified
};

// Checks the Hall-basis images of [u], [v] through degree d: accepted from
// the base vertex, pairwise distinct, and leading monomial equal to W(u, v).
// Throws InvalidCertificate.
LieFreenessReport verify_lie_freeness(const UfnAutomaton& aut, const FreePairCertificate& cert, std::size_t d,
                                      ExpansionMethod method = ExpansionMethod::LeadingTerms,
                                      Execution execution = Execution::Parallel);

// Element 1 + x of the algebra truncated at degree N, optionally inside the
// quotient described by a monomial filter. Multiplication drops monomials of
// length >= N and monomials the filter rejects.
class TruncatedUnit {
 public:
  TruncatedUnit(NcPoly poly, TruncationDegree N, MonomialFilter keep = {});

  static TruncatedUnit one(std::size_t alphabet_size, TruncationDegree N, MonomialFilter keep = {});

  const NcPoly& poly() const { return poly_; }
  TruncationDegree degree() const { return degree_; }
  const MonomialFilter& filter() const { return keep_; }
  bool is_identity() const;

  // poly() - 1
  NcPoly augmentation() const;

  friend TruncatedUnit operator*(const TruncatedUnit& a, const TruncatedUnit& b);

 private:
  NcPoly poly_;
  TruncationDegree degree_;
  MonomialFilter keep_;
};

// Neumann series: (1 + x)^{-1} = sum (-x)^i, truncated.
TruncatedUnit unit_inverse(const TruncatedUnit& g);

// a^{-1} b^{-1} a b
TruncatedUnit group_commutator(const TruncatedUnit& a, const TruncatedUnit& b);

// [[g_1, g_2], g_3] ... folded left to right.
TruncatedUnit left_normalized_commutator(std::span<const TruncatedUnit> gs);

struct GroupRelationsReport {
  std::size_t n = 0;
  std::size_t truncation = 0;
  std::size_t tuples_checked = 0;
  bool exhaustive = true;  // false when the cap cut the enumeration short
  std::optional<std::vector<std::size_t>> failing_tuple;
  bool verified = false;
};

// Tuples of generators used by verify_group_relations: for k = 3..n, index
// tuples of length k with fewer than k distinct entries, one per orbit under
// relabelling (first occurrences appear in increasing order), lex order.
std::vector<std::vector<std::size_t>> relation_tuples(std::size_t n);

// Every such left-normalized commutator of 1 + x_i must equal 1 exactly in
// A_{n+2} truncated at N.
GroupRelationsReport verify_group_relations(std::size_t n, TruncationDegree N, std::size_t cap,
                                            Execution execution = Execution::Parallel);

// Free-group word over x, y: +1 = x, -1 = x^-1, +2 = y, -2 = y^-1.
using GroupWord = std::vector<int>;

// Nonempty freely reduced words of length <= L, by length then letter order
// x, x^-1, y, y^-1.
std::vector<GroupWord> reduced_group_words(std::size_t L);
std::string format_group_word(const GroupWord& w);

struct GroupWordRow {
  GroupWord word;
  std::size_t lowest_degree = 0;  // degree of the lowest surviving component
  Word witness;                   // a monomial of that component with nonzero coefficient
  Integer coefficient;
};

struct FreeSubgroupReport {
  std::size_t max_word_length = 0;
  std::size_t truncation = 0;
  ExpansionMethod method = ExpansionMethod::LeadingTerms;
  std::vector<GroupWordRow> rows;
  bool verified = false;
  std::string failure;
};

inline std::size_t default_truncation(std::size_t L, const FreePairCertificate& cert) {
  return L * std::max(cert.u.size(), cert.v.size()) + 2;
}

// g = 1 + [u], h = 1 + [v]; every reduced word R of length <= L must satisfy
// R(g, h) != 1 in A truncated at N. Throws InvalidCertificate and
// TruncationTooSmall (N <= L * max(|u|, |v|) + 1).
FreeSubgroupReport verify_free_subgroup(const UfnAutomaton& aut, const FreePairCertificate& cert, std::size_t L,
                                        std::optional<std::size_t> N = std::nullopt,
                                        ExpansionMethod method = ExpansionMethod::LeadingTerms,
                                        Execution execution = Execution::Parallel);

}  // namespace freelie

#endif  // FREELIE_VERIFIER_HPP
