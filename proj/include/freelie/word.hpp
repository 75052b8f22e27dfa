#ifndef FREELIE_WORD_HPP
#define FREELIE_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freelie {

// Index of a symbol inside its Alphabet; the numeric order is the base order.
using Letter = std::uint8_t;

// A finite word: a sequence of letter indices. Stored in a std::string so
// that factor search and concatenation come for free; letters are kept below
// 128 so the character ordering of std::string agrees with letter order.
class Word {
 public:
  static constexpr std::size_t npos = std::string::npos;

  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size() - 1]; }

  Word substr(std::size_t pos, std::size_t len = npos) const { return Word(letters_.substr(pos, len)); }
  Word prefix(std::size_t n) const { return substr(0, n); }
  Word suffix(std::size_t n) const { return substr(size() - n); }

  // Moves the first `shift` letters to the end.
  Word rotated(std::size_t shift) const;
  Word power(std::size_t k) const;

  bool starts_with(const Word& w) const { return std::string_view(letters_).starts_with(w.letters_); }
  bool ends_with(const Word& w) const { return std::string_view(letters_).ends_with(w.letters_); }
  bool contains(const Word& w) const { return letters_.find(w.letters_) != std::string::npos; }

  void push_back(Letter x) { letters_.push_back(static_cast<char>(x)); }
  Word& operator+=(const Word& w) {
    letters_ += w.letters_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  const std::string& str() const { return letters_; }

  // Plain lexicographic order with a proper prefix sorting first. Use
  // lex_compare when the prefix case has to be distinguished.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.str()); }
};

// Ordered set of symbol names; position in the sequence is the base order.
class Alphabet {
 public:
  static constexpr std::size_t max_size = 127;

  explicit Alphabet(std::vector<std::string> symbols);

  // "ab" -> {a, b}
  static Alphabet of_chars(std::string_view chars);
  // prefix "x", n = 3 -> {x1, x2, x3}
  static Alphabet indexed(std::string_view prefix, std::size_t n);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter x) const { return symbols_.at(x); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Letter> find(std::string_view name) const;

  // Greedy longest-match tokenization, so "x1x2" parses over {x1, x2}.
  // "" and "ε" denote the empty word.
  Word parse(std::string_view text) const;
  Word from_symbols(const std::vector<std::string>& names) const;
  std::vector<std::string> to_symbols(const Word& w) const;
  std::string format(const Word& w) const;

  bool valid(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

enum class LexOutcome { Less, Greater, Equal, LeftIsPrefix, RightIsPrefix };

LexOutcome lex_compare(const Word& a, const Word& b);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

// u = root^exponent with the exponent maximal. Throws on the empty word.
PrimitiveRoot primitive_root(const Word& u);
bool is_primitive(const Word& u);

bool is_cyclically_conjugate(const Word& u, const Word& v);

// 0-based start positions of every occurrence of pat in text.
std::vector<std::size_t> factor_positions(const Word& pat, const Word& text);

// Occurrences of v inside the finite window u^N. u must be primitive.
std::vector<std::size_t> occurrences_in_power(const Word& v, const Word& u, std::size_t N);

struct ShiftDecomposition {
  std::size_t power = 0;
  Word remainder;  // proper prefix of u
};

// Checks uW = Wr and returns W = u^power remainder.
ShiftDecomposition shift_equation_decompose(const Word& u, const Word& W, const Word& r);

// w[i] = w[i + p] wherever both sides are defined.
bool has_period(const Word& w, std::size_t p);

// Executable overlap lemma: false only for a word with periods m and n,
// length >= m + n - 1, that lacks period gcd(m, n).
bool check_overlap(std::size_t m, std::size_t n, const Word& w);

// Every word over `alphabet_size` letters with length in [min_len, max_len],
// shortlex order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t min_len, std::size_t max_len);

}  // namespace freelie

#endif  // FREELIE_WORD_HPP
