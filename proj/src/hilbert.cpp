#include "freelie/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "freelie/errors.hpp"

namespace freelie {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RationalPoly = std::vector<Rational>;

void strip(RationalPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Integer to_integer(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1) throw std::logic_error("expected an integer coefficient");
  return boost::multiprecision::numerator(r);
}

// Characteristic polynomial det(xI - H) via Hessenberg reduction over Q,
// coefficients constant term first.
RationalPoly characteristic_polynomial(std::vector<std::vector<Rational>> h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && h[pivot][m - 1] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      std::swap(h[pivot], h[m]);
      for (auto& row : h) std::swap(row[pivot], row[m]);
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      const Rational u = h[i][m - 1] / h[m][m - 1];
      for (std::size_t j = 0; j < n; ++j) h[i][j] -= u * h[m][j];
      for (std::size_t j = 0; j < n; ++j) h[j][m] += u * h[j][i];
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<RationalPoly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    RationalPoly next(m + 1, 0);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] += p[m - 1][k];
      next[k] -= h[m - 1][m - 1] * p[m - 1][k];
    }
    Rational t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h[i][i - 1];
      const Rational factor = h[i - 1][m - 1] * t;
      if (factor != 0)
        for (std::size_t k = 0; k < p[i - 1].size(); ++k) next[k] -= factor * p[i - 1][k];
    }
    p[m] = std::move(next);
  }
  return p[n];
}

}  // namespace

LinearRecurrence minimal_recurrence(const std::vector<Integer>& sequence) {
  RationalPoly c{1}, b{1};
  std::size_t length = 0, shift = 1;
  Rational last = 1;
  for (std::size_t n = 0; n < sequence.size(); ++n) {
    Rational d = sequence[n];
    for (std::size_t i = 1; i <= length && i < c.size(); ++i) d += c[i] * Rational(sequence[n - i]);
    if (d == 0) {
      ++shift;
      continue;
    }
    RationalPoly updated = c;
    if (updated.size() < b.size() + shift) updated.resize(b.size() + shift, 0);
    const Rational coef = d / last;
    for (std::size_t i = 0; i < b.size(); ++i) updated[i + shift] -= coef * b[i];
    if (2 * length <= n) {
      b = c;
      length = n + 1 - length;
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(updated);
  }
  strip(c);
  LinearRecurrence out;
  out.length = length;
  for (const auto& x : c) out.connection.push_back(to_integer(x));
  return out;
}

std::vector<Integer> series_expansion(const HilbertSeries& h, std::size_t terms) {
  if (h.denominator.empty() || h.denominator[0] != 1) throw std::invalid_argument("series_expansion: Q(0) must be 1");
  std::vector<Integer> s(terms, 0);
  for (std::size_t n = 0; n < terms; ++n) {
    Integer v = n < h.numerator.size() ? h.numerator[n] : Integer(0);
    for (std::size_t i = 1; i < h.denominator.size() && i <= n; ++i) v -= h.denominator[i] * s[n - i];
    s[n] = v;
  }
  return s;
}

std::vector<Integer> transfer_polynomial(const UfnAutomaton& aut) {
  const std::size_t n = aut.state_count();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t s = 0; s < n; ++s)
    for (StateId t : aut.row(static_cast<StateId>(s)))
      if (t != kDead) m[s][static_cast<std::size_t>(t)] += 1;
  // det(I - tM) = t^n chi(1/t): the characteristic coefficients reversed.
  RationalPoly chi = characteristic_polynomial(std::move(m));
  std::vector<Integer> out;
  for (auto it = chi.rbegin(); it != chi.rend(); ++it) out.push_back(to_integer(*it));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

bool polynomial_divides(const std::vector<Integer>& divisor, const std::vector<Integer>& dividend) {
  RationalPoly d(divisor.begin(), divisor.end()), r(dividend.begin(), dividend.end());
  strip(d);
  strip(r);
  if (d.empty() || (d.size() == 1 && d[0] == 0)) throw std::invalid_argument("polynomial_divides: zero divisor");
  while (r.size() >= d.size() && !(r.size() == 1 && r[0] == 0)) {
    const Rational q = r.back() / d.back();
    const std::size_t offset = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[offset + i] -= q * d[i];
    r.pop_back();
    strip(r);
    if (r.empty()) break;
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

// Above this many states the O(n^3) rational determinant is skipped.
constexpr std::size_t kDeterminantCheckLimit = 64;

HilbertSeries hilbert_series(const UfnAutomaton& aut, std::size_t K) {
  const std::size_t needed = 2 * aut.state_count() + 2;
  if (K < needed)
    throw RecurrenceNotStabilized("hilbert_series: need at least " + std::to_string(needed) + " terms, got " +
                                  std::to_string(K));
  std::vector<Integer> seq{1};
  for (auto& c : count_words(aut, K)) seq.push_back(std::move(c));
  auto rec = minimal_recurrence(seq);
  if (2 * rec.length > seq.size())
    throw RecurrenceNotStabilized("hilbert_series: recurrence of length " + std::to_string(rec.length) +
                                  " not determined by " + std::to_string(seq.size()) + " terms");

  HilbertSeries h;
  h.denominator = rec.connection;
  // P = (S * Q) mod t^length
  for (std::size_t n = 0; n < rec.length; ++n) {
    Integer v = 0;
    for (std::size_t i = 0; i < h.denominator.size() && i <= n; ++i) v += h.denominator[i] * seq[n - i];
    h.numerator.push_back(v);
  }
  while (h.numerator.size() > 1 && h.numerator.back() == 0) h.numerator.pop_back();
  if (h.numerator.empty()) h.numerator.push_back(0);

  if (series_expansion(h, seq.size()) != seq) throw std::logic_error("hilbert_series: expansion mismatch");
  if (aut.state_count() <= kDeterminantCheckLimit && !polynomial_divides(h.denominator, transfer_polynomial(aut)))
    throw std::logic_error("hilbert_series: denominator does not divide det(I - tM)");
  return h;
}

GrowthReport growth_report(const UfnAutomaton& aut, std::size_t K, bool with_hilbert) {
  GrowthReport r;
  r.counts = count_words(aut, K);
  r.kind = classify_growth(aut);
  if (with_hilbert) r.hilbert = hilbert_series(aut, std::max(K, 2 * aut.state_count() + 2));
  return r;
}

}  // namespace freelie
