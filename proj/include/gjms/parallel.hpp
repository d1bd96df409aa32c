#pragma once

#include <array>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gjms {

enum class Exec { Serial, Parallel };

namespace detail {
// Slot count is fixed so the reduction tree never depends on the thread
// count: the same binary summation order is used for 1 thread or 64.
inline constexpr std::size_t kSumSlots = 256;
}  // namespace detail

/// Sum of term(i) for i in [0, n). The Serial path is the plain reference
/// loop; the Parallel path accumulates into a fixed number of slots and
/// reduces them in index order, so its result is bitwise reproducible for
/// any thread count (but may differ from Serial in the last ulps).
template <class F>
double indexed_sum(std::size_t n, F&& term, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial || n < 2 * detail::kSumSlots) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += term(i);
    return s;
  }
  std::array<double, detail::kSumSlots> slot{};
  const std::size_t per = (n + detail::kSumSlots - 1) / detail::kSumSlots;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long si = 0; si < static_cast<long long>(detail::kSumSlots); ++si) {
    const std::size_t b = static_cast<std::size_t>(si) * per;
    const std::size_t e = b + per < n ? b + per : n;
    double local = 0.0;
    for (std::size_t i = b; i < e; ++i) local += term(i);
    slot[static_cast<std::size_t>(si)] = local;
  }
  double s = 0.0;
  for (double v : slot) s += v;
  return s;
}

/// Runs body(i) for i in [0, n); iterations must be independent.
template <class F>
void parallel_for(std::size_t n, F&& body, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    body(static_cast<std::size_t>(i));
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void cap_threads(int nthreads) {
#ifdef _OPENMP
  if (nthreads > 0) omp_set_num_threads(nthreads);
#else
  (void)nthreads;
#endif
}

}  // namespace gjms
