#include "freelie/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "freelie/errors.hpp"

namespace freelie {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter x : letters) push_back(x);
}

Word Word::rotated(std::size_t shift) const {
  if (empty()) return *this;
  shift %= size();
  return Word(letters_.substr(shift) + letters_.substr(0, shift));
}

Word Word::power(std::size_t k) const {
  std::string out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += letters_;
  return Word(std::move(out));
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (symbols_.size() > max_size) throw std::invalid_argument("alphabet too large");
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw std::invalid_argument("empty symbol name");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate symbol '" + s + "'");
  }
}

Alphabet Alphabet::of_chars(std::string_view chars) {
  std::vector<std::string> names;
  for (char c : chars) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

Alphabet Alphabet::indexed(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<Letter>(it - symbols_.begin());
}

Word Alphabet::parse(std::string_view text) const {
  if (text == "ε") return {};
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const auto& s = symbols_[i];
      if (s.size() > best_len && text.substr(pos).starts_with(s)) {
        best_len = s.size();
        best = static_cast<Letter>(i);
      }
    }
    if (best_len == 0)
      throw std::invalid_argument("cannot parse '" + std::string(text) + "' at offset " + std::to_string(pos));
    w.push_back(best);
    pos += best_len;
  }
  return w;
}

Word Alphabet::from_symbols(const std::vector<std::string>& names) const {
  Word w;
  for (const auto& n : names) {
    auto x = find(n);
    if (!x) throw std::invalid_argument("unknown symbol '" + n + "'");
    w.push_back(*x);
  }
  return w;
}

std::vector<std::string> Alphabet::to_symbols(const Word& w) const {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(symbol(w[i]));
  return out;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += symbol(w[i]);
  return out;
}

bool Alphabet::valid(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= symbols_.size()) return false;
  return true;
}

LexOutcome lex_compare(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? LexOutcome::Less : LexOutcome::Greater;
  }
  if (a.size() == b.size()) return LexOutcome::Equal;
  return a.size() < b.size() ? LexOutcome::LeftIsPrefix : LexOutcome::RightIsPrefix;
}

namespace {

// Border array (KMP failure function): border[i] = length of the longest
// proper border of the prefix of length i.
std::vector<std::size_t> borders(const Word& w) {
  std::vector<std::size_t> border(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return border;
}

}  // namespace

PrimitiveRoot primitive_root(const Word& u) {
  if (u.empty()) throw std::invalid_argument("primitive_root: empty word");
  const std::size_t n = u.size();
  const std::size_t period = n - borders(u)[n];
  if (n % period != 0) return {u, 1};
  return {u.prefix(period), n / period};
}

bool is_primitive(const Word& u) { return primitive_root(u).exponent == 1; }

bool is_cyclically_conjugate(const Word& u, const Word& v) {
  return u.size() == v.size() && (u + u).contains(v);
}

std::vector<std::size_t> factor_positions(const Word& pat, const Word& text) {
  if (pat.empty()) throw std::invalid_argument("factor_positions: empty pattern");
  std::vector<std::size_t> out;
  const auto& t = text.str();
  for (auto pos = t.find(pat.str()); pos != std::string::npos; pos = t.find(pat.str(), pos + 1))
    out.push_back(pos);
  return out;
}

std::vector<std::size_t> occurrences_in_power(const Word& v, const Word& u, std::size_t N) {
  if (u.empty() || v.empty()) throw std::invalid_argument("occurrences_in_power: empty word");
  if (!is_primitive(u)) throw CyclicInput("occurrences_in_power: period word is a proper power");
  return factor_positions(v, u.power(N));
}

ShiftDecomposition shift_equation_decompose(const Word& u, const Word& W, const Word& r) {
  if (u.empty() || W.empty() || r.empty()) throw std::invalid_argument("shift equation: empty word");
  if (u.size() != r.size()) throw std::invalid_argument("shift equation: |u| != |r|");
  if (u + W != W + r) throw EquationDoesNotHold("uW != Wr");
  // uW = Wr forces W to have period |u| with W starting with u (or being a
  // prefix of u), so W = u^n p with p a proper prefix of u.
  const std::size_t n = W.size() / u.size();
  Word p = W.substr(n * u.size());
  if (W != u.power(n) + p || !u.starts_with(p)) throw std::logic_error("shift equation: decomposition failed");
  return {n, std::move(p)};
}

bool has_period(const Word& w, std::size_t p) {
  if (p == 0) return false;
  for (std::size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

bool check_overlap(std::size_t m, std::size_t n, const Word& w) {
  if (m == 0 || n == 0) throw std::invalid_argument("check_overlap: periods must be positive");
  if (!has_period(w, m) || !has_period(w, n)) return true;
  if (w.size() < m + n - 1) return true;
  return has_period(w, std::gcd(m, n));
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Word w;
      for (auto d : digits) w.push_back(static_cast<Letter>(d));
      out.push_back(std::move(w));
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == alphabet_size) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

}  // namespace freelie
