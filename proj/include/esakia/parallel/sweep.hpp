#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace esakia {

enum class Execution { Serial, Parallel };

/// Evaluates f(0) .. f(count-1) and returns the results in index order. With
/// Execution::Parallel the calls are spread over OpenMP threads; an exception
/// from any call is rethrown after the loop (the lowest index wins).
template <typename R, typename F>
std::vector<R> sweep(std::size_t count, F&& f, Execution exec = Execution::Parallel) {
  std::vector<R> out(count);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = f(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Number of worker threads a parallel sweep would use.
int sweep_threads();

}  // namespace esakia
