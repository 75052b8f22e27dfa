#ifndef FREELIE_PARALLEL_HPP
#define FREELIE_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace freelie {

// Every data-parallel kernel has a serial path with identical results; the
// serial one is the reference the tests compare against.
enum class Execution { Serial, Parallel };

// out[i] = f(i) for i < n. Results keep index order regardless of schedule.
// The first exception thrown by any index (lowest index wins) is rethrown.
template <class F>
auto ordered_map(std::size_t n, Execution execution, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace freelie

#endif  // FREELIE_PARALLEL_HPP
