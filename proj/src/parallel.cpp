#include "semibrick/parallel.hpp"

#include <atomic>
#include <limits>

#include <omp.h>

namespace semibrick::par {

namespace {

std::atomic<int> g_workers{0};
std::atomic<Backend> g_backend{Backend::OpenMP};

}  // namespace

void set_workers(int n) { g_workers = n < 0 ? 0 : n; }

int workers() {
  const int n = g_workers.load();
  return n > 0 ? n : omp_get_max_threads();
}

void set_backend(Backend b) { g_backend = b; }
Backend backend() { return g_backend.load(); }

void for_each(std::size_t n, const std::function<void(std::size_t)>& body, Backend b) {
  if (b == Backend::Serial || n < 2 || workers() == 1 || omp_in_parallel()) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> first_error{std::numeric_limits<std::size_t>::max()};
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(workers())
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx > first_error.load(std::memory_order_relaxed)) continue;
    try {
      body(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
      auto cur = first_error.load();
      while (idx < cur && !first_error.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  const auto failed = first_error.load();
  if (failed != std::numeric_limits<std::size_t>::max()) std::rethrow_exception(errors[failed]);
}

}  // namespace semibrick::par
