#pragma once

#include <cstddef>
#include <utility>

namespace hemifill::par {

// True when the library was compiled with OpenMP support.
bool openmp_enabled();

// Worker pool size: HEMIFILL_THREADS when set (>= 1), else the OpenMP
// default, else 1.
int worker_count();

// Reference path. Kept deliberately plain so results of the OpenMP path can
// be checked against it bit for bit.
template <typename Fn>
void run_indexed_serial(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

namespace detail {
void run_openmp(std::size_t n, void (*thunk)(void*, std::size_t), void* ctx);
}

// OpenMP path. fn(i) must write only to slots owned by index i; aggregation
// happens afterwards in index order, so output bytes do not depend on the
// thread count.
template <typename Fn>
void run_indexed_openmp(std::size_t n, Fn&& fn) {
  using F = std::decay_t<Fn>;
  F local(std::forward<Fn>(fn));
  detail::run_openmp(
      n, [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); }, &local);
}

template <typename Fn>
void run_indexed(std::size_t n, bool parallel, Fn&& fn) {
  if (parallel) {
    run_indexed_openmp(n, std::forward<Fn>(fn));
  } else {
    run_indexed_serial(n, std::forward<Fn>(fn));
  }
}

}  // namespace hemifill::par
