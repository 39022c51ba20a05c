#pragma once

#include <cstddef>
#include <vector>

namespace varlex {

// Number of worker threads the kernels may use. Initialized from the OpenMP
// default and capped by the VARLEX_THREADS environment variable when set.
int thread_count();

// Programmatic override of the thread cap (tests use this; n <= 0 restores
// the environment-derived default).
void set_thread_cap(int n);

inline constexpr std::size_t kSumBlock = 2048;

// Deterministic parallel reduction: the index range is split into fixed-size
// blocks, block sums are computed independently and combined in block order.
// The result is identical for any thread count, which keeps report output
// byte-stable.
template <class Term>
double deterministic_sum(std::size_t n, Term&& term) {
  if (n == 0) return 0.0;
  if (n <= kSumBlock) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += term(i);
    return acc;
  }
  const std::size_t blocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static) num_threads(varlex::thread_count())
  for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kSumBlock;
    const std::size_t end = begin + kSumBlock < n ? begin + kSumBlock : n;
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double acc = 0.0;
  for (double v : partial) acc += v;
  return acc;
}

}  // namespace varlex
