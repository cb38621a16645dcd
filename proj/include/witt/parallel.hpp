#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace witt {

enum class ExecPolicy { serial, parallel };

/// Runs f(k) for k in [0, n). The parallel path uses an OpenMP loop; callers
/// write results into slot k, so the outcome never depends on scheduling.
/// The first exception (lowest k) is rethrown after the loop.
template <class F>
void for_each_index(std::size_t n, ExecPolicy policy, F&& f) {
  if (policy == ExecPolicy::serial || n < 2) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      f(static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace witt
