#pragma once

// Data-parallel loop kernels. Every kernel has an OpenMP path and a serial
// reference path; both produce results in index order so callers merge
// deterministically regardless of worker count.

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace semibrick::par {

enum class Backend { Serial, OpenMP };

/// 0 selects the OpenMP runtime default.
void set_workers(int n);
int workers();
void set_backend(Backend b);
Backend backend();

/// body(i) for i in [0, n). If bodies throw, the exception of the lowest
/// failing index is rethrown after the loop.
void for_each(std::size_t n, const std::function<void(std::size_t)>& body, Backend b = backend());

template <class T, class F>
std::vector<T> map(std::size_t n, F&& f, Backend b = backend()) {
  std::vector<std::optional<T>> slots(n);
  for_each(n, [&](std::size_t i) { slots[i].emplace(f(i)); }, b);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// RAII override of the process-wide backend, for tests and benchmarks.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend b) : saved_(backend()) { set_backend(b); }
  ~ScopedBackend() { set_backend(saved_); }
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend saved_;
};

}  // namespace semibrick::par
