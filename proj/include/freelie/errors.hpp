#ifndef FREELIE_ERRORS_HPP
#define FREELIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freelie {

// Base for every domain error raised by the toolkit. Plain precondition
// violations (empty input where a word is required, zero exponents) use
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FREELIE_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

FREELIE_DEFINE_ERROR(AlphabetMismatch);
FREELIE_DEFINE_ERROR(EquationDoesNotHold);
FREELIE_DEFINE_ERROR(CyclicInput);
FREELIE_DEFINE_ERROR(NotRegular);
FREELIE_DEFINE_ERROR(EquivalentInputs);
FREELIE_DEFINE_ERROR(ZeroPolynomial);
FREELIE_DEFINE_ERROR(NotSubwordClosed);
FREELIE_DEFINE_ERROR(RecurrenceNotStabilized);
FREELIE_DEFINE_ERROR(UnknownState);
FREELIE_DEFINE_ERROR(PolynomialGrowth);
FREELIE_DEFINE_ERROR(InvalidCertificate);
FREELIE_DEFINE_ERROR(TruncationTooSmall);

// Raised when the regular-pair search runs past its candidate budget; the CLI
// reports it as an alarm.
FREELIE_DEFINE_ERROR(CapExceeded);

#undef FREELIE_DEFINE_ERROR

}  // namespace freelie

#endif  // FREELIE_ERRORS_HPP
