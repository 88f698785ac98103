#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cosserat {

/// Execution policy for the data-parallel kernels. Both policies produce
/// bit-identical results: parallel runs fill a per-point buffer and the
/// reduction always happens serially in index order.
enum class Exec { Serial, OpenMP };

template <typename F>
void parallelFor(std::size_t n, F&& fn, Exec exec) {
#ifdef _OPENMP
  if (exec == Exec::OpenMP) {
    std::exception_ptr error;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// Evaluates pointFn at every index into a buffer, then accumulates the
/// buffer in ascending index order (deterministic summation).
template <typename F>
double mapReduce(std::size_t n, F&& pointFn, Exec exec) {
  std::vector<double> values(n);
  parallelFor(
      n, [&](std::size_t i) { values[i] = pointFn(i); }, exec);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += values[i];
  return acc;
}

inline bool openmpEnabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace cosserat
