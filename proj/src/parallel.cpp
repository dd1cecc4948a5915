#include "hemifill/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hemifill::par {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int worker_count() {
  if (const char* env = std::getenv("HEMIFILL_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
      // fall through to the defaults on unparsable values
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

void run_openmp(std::size_t n, void (*thunk)(void*, std::size_t), void* ctx) {
#ifdef _OPENMP
  const int threads = worker_count();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    thunk(ctx, static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) thunk(ctx, i);
#endif
}

}  // namespace detail

}  // namespace hemifill::par
