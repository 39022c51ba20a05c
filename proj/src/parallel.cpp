#include "varlex/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace varlex {
namespace {

int g_cap = 0;  // 0 = no programmatic cap

int env_cap() {
  static const int cached = [] {
    const char* raw = std::getenv("VARLEX_THREADS");
    if (raw == nullptr) return 0;
    try {
      const int v = std::stoi(raw);
      return v > 0 ? v : 0;
    } catch (...) {
      return 0;
    }
  }();
  return cached;
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const int e = env_cap(); e > 0 && e < n) n = e;
  if (g_cap > 0 && g_cap < n) n = g_cap;
  return n < 1 ? 1 : n;
}

void set_thread_cap(int n) { g_cap = n > 0 ? n : 0; }

}  // namespace varlex
