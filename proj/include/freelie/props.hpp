#ifndef FREELIE_PROPS_HPP
#define FREELIE_PROPS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freelie/parallel.hpp"
#include "freelie/word.hpp"

namespace freelie {

// Brute-force property suites over the periodicity and ordering results on
// words. Exhaustive ranges are enumerated shortlex, so the first reported
// counterexample is already small; randomized properties shrink theirs.
enum class Suite { Overlap, Switching, Regular, Bracketing, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // at most kMaxReported, in case order
};

inline constexpr std::size_t kMaxReported = 5;

struct SuiteReport {
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

SuiteReport run_suite(Suite suite, std::uint64_t seed, Execution execution = Execution::Parallel);

// Greedy minimization of a failing word: drop single letters while the
// predicate keeps failing, then merge the largest letter into smaller ones.
Word shrink_word(Word w, const std::function<bool(const Word&)>& still_fails);

}  // namespace freelie

#endif  // FREELIE_PROPS_HPP
