#ifndef FREELIE_HILBERT_HPP
#define FREELIE_HILBERT_HPP

#include <cstddef>
#include <vector>

#include "freelie/automaton.hpp"

namespace freelie {

// Rational Hilbert series P/Q of the automaton's language, found by exact
// Berlekamp-Massey over the rationals on 1, c_1, ..., c_K and cross-checked
// against det(I - tM). Needs K >= 2 * state_count + 2; otherwise throws
// RecurrenceNotStabilized.
HilbertSeries hilbert_series(const UfnAutomaton& aut, std::size_t K);

// Shortest linear recurrence of an integer sequence: connection polynomial C
// with C(0) = 1 and sum_i C[i] s[n - i] = 0 for n >= length. Trailing zero
// coefficients are stripped; `length` is the linear complexity.
struct LinearRecurrence {
  std::vector<Integer> connection;
  std::size_t length = 0;
};

LinearRecurrence minimal_recurrence(const std::vector<Integer>& sequence);

// First `terms` coefficients of P/Q; requires Q(0) = 1.
std::vector<Integer> series_expansion(const HilbertSeries& h, std::size_t terms);

// Coefficients of det(I - tM), M the live transition-count matrix.
std::vector<Integer> transfer_polynomial(const UfnAutomaton& aut);

// True iff divisor divides dividend in Q[t].
bool polynomial_divides(const std::vector<Integer>& divisor, const std::vector<Integer>& dividend);

}  // namespace freelie

#endif  // FREELIE_HILBERT_HPP
