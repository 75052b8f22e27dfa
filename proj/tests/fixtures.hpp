#ifndef FREELIE_TESTS_FIXTURES_HPP
#define FREELIE_TESTS_FIXTURES_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "freelie/automaton.hpp"
#include "freelie/poly.hpp"
#include "oracles.hpp"

namespace fixtures {

// Alphabet of 1..3 letters, 1..4 forbidden words of length 1..3.
inline freelie::Presentation random_presentation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> letters(1, 3), count(1, 4), len(1, 3);
  const std::size_t k = letters(rng);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(k) - 1);
  freelie::Presentation p{freelie::Alphabet::of_chars(std::string("abc").substr(0, k)), {}};
  for (std::size_t i = count(rng); i > 0; --i) {
    freelie::Word w;
    for (std::size_t n = len(rng); n > 0; --n) w.push_back(static_cast<freelie::Letter>(letter(rng)));
    p.forbidden.push_back(w);
  }
  return freelie::normalize_presentation(p);
}

inline std::vector<oracle::Str> forbidden_strings(const freelie::Presentation& p) {
  std::vector<oracle::Str> out;
  for (const auto& w : p.forbidden) out.push_back(oracle::str(w));
  return out;
}

inline double to_double(const freelie::Integer& x) { return x.convert_to<double>(); }

// Exponential: c_k >= 2^floor(k / (|w1| + |w2|)) for k <= 12.
// Polynomial(d), d >= 1: with C fitted as max c_k / k^(d-1) over k <= 20,
// c_k <= 2 C k^(d-1) for k <= 40. Polynomial(0): the language is finite.
// Returns an empty string when consistent.
inline std::string growth_inconsistency(const freelie::UfnAutomaton& aut) {
  const auto kind = freelie::classify_growth(aut);
  const auto counts = freelie::count_words(aut, 40, freelie::Execution::Serial);
  if (kind.exponential) {
    if (!kind.witness) return "exponential without witness";
    const std::size_t period = kind.witness->first.size() + kind.witness->second.size();
    for (std::size_t k = 1; k <= 12; ++k)
      if (counts[k - 1] < freelie::Integer(1) << (k / period)) return "c_" + std::to_string(k) + " below 2^[k/p]";
    return {};
  }
  if (kind.degree == 0) {
    for (std::size_t k = aut.state_count() + 1; k <= 40; ++k)
      if (counts[k - 1] != 0) return "finite growth with c_" + std::to_string(k) + " > 0";
    return {};
  }
  const double e = static_cast<double>(kind.degree - 1);
  double C = 0;
  for (std::size_t k = 1; k <= 20; ++k) C = std::max(C, to_double(counts[k - 1]) / std::pow(double(k), e));
  for (std::size_t k = 1; k <= 40; ++k) {
    if (to_double(counts[k - 1]) > 2 * C * std::pow(double(k), e))
      return "c_" + std::to_string(k) + " exceeds the fitted polynomial bound";
    if (counts[k - 1] == 0) return "polynomial growth with c_" + std::to_string(k) + " = 0";
  }
  return {};
}

}  // namespace fixtures

#endif  // FREELIE_TESTS_FIXTURES_HPP
