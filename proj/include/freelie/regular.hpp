#ifndef FREELIE_REGULAR_HPP
#define FREELIE_REGULAR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "freelie/word.hpp"

namespace freelie {

// Ufnarovsky order: f ▷ g iff the right superword f^∞ exceeds g^∞.
enum class UfnOutcome { Greater, Less, Equivalent };

UfnOutcome ufn_compare(const Word& f, const Word& g);

// Regular: strictly greater than every proper rotation (the mirror image of
// the usual smallest-rotation Lyndon convention).
bool is_regular(const Word& u);

struct RegularityClass {
  enum class Kind { Regular, SemiRegularPower, NotSemiRegular };
  Kind kind = Kind::NotSemiRegular;
  Word root;               // set for Regular (the word itself) and SemiRegularPower
  std::size_t exponent = 0;

  bool semi_regular() const { return kind != Kind::NotSemiRegular; }
};

RegularityClass classify_regularity(const Word& u);

struct Rotation {
  std::size_t shift = 0;  // leading letters moved to the end
  Word word;
};

// The unique regular rotation of a primitive word. Throws CyclicInput.
Rotation regular_rotation(const Word& u);

// Standard Lie bracket arrangement of a regular word. Immutable; subtrees are
// shared between copies.
class BracketTree {
 public:
  static BracketTree leaf(Letter x);
  static BracketTree node(BracketTree left, BracketTree right);

  bool is_leaf() const { return !node_; }
  Letter letter() const;
  const BracketTree& left() const;
  const BracketTree& right() const;

  // Left-to-right leaf word.
  Word frontier() const;
  std::size_t leaf_count() const;

  // "[b,[b,a]]"; a bare symbol for a leaf.
  std::string format(const Alphabet& alphabet) const;

  friend bool operator==(const BracketTree& a, const BracketTree& b);

 private:
  struct Node;
  BracketTree() = default;

  Letter letter_ = 0;
  std::shared_ptr<const Node> node_;
};

struct BracketTree::Node {
  BracketTree left;
  BracketTree right;
};

// [u] = [[u1],[u2]] with u2 the longest proper regular suffix. Throws
// NotRegular.
BracketTree standard_bracketing(const Word& u);

// All regular words of length <= max_len over the first `alphabet_size`
// letters, sorted by decreasing ▷.
std::vector<Word> enumerate_regular(std::size_t alphabet_size, std::size_t max_len);

struct PowerProduct {
  Word word;
  bool regular = false;
};

// u^k v^l together with a regularity check of the result. Only the
// equivalence precondition is enforced (EquivalentInputs).
PowerProduct power_product(const Word& u, const Word& v, std::size_t k, std::size_t l);

// Two-letter alphabet {B, A} with B ≺ A, used for words W(A, B).
Alphabet hall_alphabet();
inline constexpr Letter kHallA = 1;
inline constexpr Letter kHallB = 0;

// Image of w under A -> u, B -> v.
Word substitute(const Word& w, const Word& u, const Word& v);

}  // namespace freelie

#endif  // FREELIE_REGULAR_HPP
