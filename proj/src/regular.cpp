#include "freelie/regular.hpp"

#include <algorithm>
#include <stdexcept>

#include "freelie/errors.hpp"

namespace freelie {

UfnOutcome ufn_compare(const Word& f, const Word& g) {
  if (f.empty() || g.empty()) throw std::invalid_argument("ufn_compare: empty word");
  // f^∞ and g^∞ agree on their first |f|+|g| letters iff fg = gf, and
  // otherwise the first difference already shows up in fg versus gf.
  const Word fg = f + g;
  const Word gf = g + f;
  if (fg == gf) return UfnOutcome::Equivalent;
  return fg > gf ? UfnOutcome::Greater : UfnOutcome::Less;
}

bool is_regular(const Word& u) {
  if (u.empty()) return false;
  // Duval's scan with the order reversed: u is regular iff it is a single
  // factor of its own factorization.
  const std::size_t n = u.size();
  std::size_t i = 0, j = 1;
  while (j < n) {
    if (u[j] < u[i]) {
      i = 0;
      ++j;
    } else if (u[j] == u[i]) {
      ++i;
      ++j;
    } else {
      return false;
    }
  }
  return i == 0;
}

RegularityClass classify_regularity(const Word& u) {
  if (u.empty()) return {};
  if (is_regular(u)) return {RegularityClass::Kind::Regular, u, 1};
  auto [root, exponent] = primitive_root(u);
  if (exponent > 1 && is_regular(root)) return {RegularityClass::Kind::SemiRegularPower, root, exponent};
  return {};
}

Rotation regular_rotation(const Word& u) {
  if (u.empty()) throw std::invalid_argument("regular_rotation: empty word");
  if (!is_primitive(u)) throw CyclicInput("regular_rotation: word is a proper power");
  Rotation best{0, u};
  for (std::size_t s = 1; s < u.size(); ++s) {
    Word r = u.rotated(s);
    if (r > best.word) best = {s, std::move(r)};
  }
  return best;
}

BracketTree BracketTree::leaf(Letter x) {
  BracketTree t;
  t.letter_ = x;
  return t;
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
  BracketTree t;
  t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right)});
  return t;
}

Letter BracketTree::letter() const {
  if (!is_leaf()) throw std::logic_error("BracketTree::letter on a node");
  return letter_;
}

const BracketTree& BracketTree::left() const {
  if (is_leaf()) throw std::logic_error("BracketTree::left on a leaf");
  return node_->left;
}

const BracketTree& BracketTree::right() const {
  if (is_leaf()) throw std::logic_error("BracketTree::right on a leaf");
  return node_->right;
}

Word BracketTree::frontier() const {
  if (is_leaf()) return Word{letter_};
  return node_->left.frontier() + node_->right.frontier();
}

std::size_t BracketTree::leaf_count() const {
  return is_leaf() ? 1 : node_->left.leaf_count() + node_->right.leaf_count();
}

std::string BracketTree::format(const Alphabet& alphabet) const {
  if (is_leaf()) return alphabet.symbol(letter_);
  return "[" + node_->left.format(alphabet) + "," + node_->right.format(alphabet) + "]";
}

bool operator==(const BracketTree& a, const BracketTree& b) {
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.letter_ == b.letter_;
  return a.node_ == b.node_ || (a.left() == b.left() && a.right() == b.right());
}

BracketTree standard_bracketing(const Word& u) {
  if (!is_regular(u)) throw NotRegular("standard_bracketing: word is not regular");
  if (u.size() == 1) return BracketTree::leaf(u[0]);
  for (std::size_t split = 1; split < u.size(); ++split) {
    Word right = u.substr(split);
    if (is_regular(right)) {
      Word left = u.prefix(split);
      return BracketTree::node(standard_bracketing(left), standard_bracketing(right));
    }
  }
  // The last letter is always a regular suffix.
  throw std::logic_error("standard_bracketing: no regular suffix");
}

std::vector<Word> enumerate_regular(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<Word> out;
  if (alphabet_size == 0 || max_len == 0) return out;
  // Fredricksen-Kessler-Maiorana generation with letters read in reverse, so
  // each generated Lyndon word maps to a regular one.
  const auto top = static_cast<Letter>(alphabet_size - 1);
  std::vector<Letter> w{0};
  while (!w.empty()) {
    Word reg;
    for (Letter x : w) reg.push_back(static_cast<Letter>(top - x));
    out.push_back(std::move(reg));
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return ufn_compare(a, b) == UfnOutcome::Greater; });
  return out;
}

PowerProduct power_product(const Word& u, const Word& v, std::size_t k, std::size_t l) {
  if (u.empty() || v.empty()) throw std::invalid_argument("power_product: empty word");
  if (k == 0 || l == 0) throw std::invalid_argument("power_product: exponents must be positive");
  if (ufn_compare(u, v) == UfnOutcome::Equivalent) throw EquivalentInputs("power_product: u ~ v");
  Word w = u.power(k) + v.power(l);
  const bool regular = is_regular(w);
  return {std::move(w), regular};
}

Alphabet hall_alphabet() { return Alphabet({"B", "A"}); }

Word substitute(const Word& w, const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw std::invalid_argument("substitute: empty image");
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == kHallA)
      out += u;
    else if (w[i] == kHallB)
      out += v;
    else
      throw std::invalid_argument("substitute: letter outside {A, B}");
  }
  return out;
}

}  // namespace freelie
