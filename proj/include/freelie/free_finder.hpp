#ifndef FREELIE_FREE_FINDER_HPP
#define FREELIE_FREE_FINDER_HPP

#include <array>
#include <cstddef>

#include "freelie/automaton.hpp"
#include "freelie/parallel.hpp"
#include "freelie/regular.hpp"

namespace freelie {

// Two regular pairwise well-based words u ▷ v read on closed paths at
// base_vertex, with their standard bracketings.
struct FreePairCertificate {
  Word u;
  Word v;
  StateId base_vertex = kDead;
  CyclePair cycles;  // source cycles w_1, w_2 at cycles.vertex
  std::array<std::size_t, 2> u_exponents{};  // (k, l): u is a rotation of w_1^k w_2^l
  std::array<std::size_t, 2> v_exponents{};
  BracketTree bracket_u = BracketTree::leaf(0);
  BracketTree bracket_v = BracketTree::leaf(0);
};

// Running w from q returns to q without dying. Throws UnknownState.
bool check_well_based(const UfnAutomaton& aut, StateId q, const Word& w);

// Throws PolynomialGrowth when no vertex carries two independent cycles.
CyclePair find_cycle_pair(const UfnAutomaton& aut);

inline constexpr std::size_t kDefaultCandidateCap = 64;

// Candidates w_1^k w_2^l (k, l >= 2, by increasing k + l then decreasing k)
// are rotated to their regular conjugate and tagged with the base vertex of
// the rotation; the first two distinct words sharing a vertex win. Throws
// CapExceeded after `cap` candidates and PolynomialGrowth for polynomial
// automata.
FreePairCertificate find_regular_pair(const UfnAutomaton& aut, std::size_t cap = kDefaultCandidateCap,
                                      Execution execution = Execution::Parallel);

// Re-checks every certificate invariant against the automaton. Throws
// InvalidCertificate naming the first violated one.
void validate_certificate(const UfnAutomaton& aut, const FreePairCertificate& cert);

}  // namespace freelie

#endif  // FREELIE_FREE_FINDER_HPP
