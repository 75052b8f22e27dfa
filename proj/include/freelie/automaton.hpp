#ifndef FREELIE_AUTOMATON_HPP
#define FREELIE_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freelie/parallel.hpp"
#include "freelie/poly.hpp"
#include "freelie/word.hpp"

namespace freelie {

// A monomial algebra: the alphabet plus the words declared zero.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> forbidden;
};

// How the A_{n+2} family reads "fewer than k symbols in a word of length k".
//   Relations: minimal zero words x v x with |x v x| <= n (the relation list).
//   Prose:     repeated letters at distance <= n, i.e. |x v x| <= n + 1.
enum class GapConvention { Relations, Prose };

Presentation family_A(std::size_t n, GapConvention convention = GapConvention::Relations);

// Removes duplicates and every forbidden word that properly contains another
// one; the result is sorted shortlex.
Presentation normalize_presentation(Presentation p);

bool avoids_all(const Word& w, const std::vector<Word>& forbidden);

using StateId = std::int32_t;
inline constexpr StateId kDead = -1;

// Deterministic automaton whose paths from the root spell exactly the nonzero
// words. Every state is accepting; a missing transition goes to kDead.
class UfnAutomaton {
 public:
  UfnAutomaton(Alphabet alphabet, std::vector<std::string> names, std::vector<StateId> delta, StateId root = 0);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return names_.size(); }
  StateId root() const { return root_; }
  const std::string& name(StateId q) const { return names_.at(static_cast<std::size_t>(q)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<StateId> find_state(const std::string& name) const;

  StateId step(StateId q, Letter x) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + x];
  }
  std::span<const StateId> row(StateId q) const {
    return {delta_.data() + static_cast<std::size_t>(q) * alphabet_.size(), alphabet_.size()};
  }

  // kDead as soon as the path leaves the automaton.
  StateId run(StateId q, const Word& w) const;
  bool accepts(const Word& w) const { return run(root_, w) != kDead; }

  bool valid_state(StateId q) const { return q >= 0 && static_cast<std::size_t>(q) < state_count(); }

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<StateId> delta_;
  StateId root_;
};

// Ufnarovsky automaton: states are the normal words of length <= l - 1
// (l = longest forbidden word), ordered shortlex, and a transition goes to
// the longest suffix that is a state. Input must be normalized.
UfnAutomaton build_automaton(const Presentation& p);

// Nondeterministic labeled digraph with a set of initial vertices.
struct LabeledGraph {
  struct Edge {
    std::size_t from;
    Letter label;
    std::size_t to;
  };

  Alphabet alphabet;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<std::size_t> initial;
};

// Subset construction, breadth-first in label order. Singleton subsets keep
// the vertex name. Throws NotSubwordClosed if some factor of an accepted word
// is rejected.
UfnAutomaton determinize_graph(const LabeledGraph& g);

// c_1..c_K: number of accepted words of each length.
std::vector<Integer> count_words(const UfnAutomaton& aut, std::size_t K,
                                 Execution execution = Execution::Parallel);

// V(n) = 1 + c_1 + ... + c_n, for n = 0..K.
std::vector<Integer> growth_function(const std::vector<Integer>& counts);

// Vertex with two closed paths whose words are not powers of a common word.
struct CyclePair {
  StateId vertex = kDead;
  Word first;
  Word second;
};

// Smallest state index carrying two distinct simple cycles with different
// primitive roots; at that vertex the cycle words are taken in shortlex
// order. nullopt iff the growth is polynomial.
std::optional<CyclePair> search_cycle_pair(const UfnAutomaton& aut);

struct GrowthKind {
  bool exponential = false;
  std::optional<CyclePair> witness;  // set iff exponential
  std::size_t degree = 0;            // polynomial degree; 0 when exponential or finite
};

GrowthKind classify_growth(const UfnAutomaton& aut);

struct HilbertSeries {
  std::vector<Integer> numerator;    // coefficients, constant term first
  std::vector<Integer> denominator;  // constant term 1
};

struct GrowthReport {
  std::vector<Integer> counts;  // c_1..c_K
  GrowthKind kind;
  std::optional<HilbertSeries> hilbert;
};

GrowthReport growth_report(const UfnAutomaton& aut, std::size_t K, bool with_hilbert);

}  // namespace freelie

#endif  // FREELIE_AUTOMATON_HPP
