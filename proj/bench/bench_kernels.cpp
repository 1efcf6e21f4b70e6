// Serial vs OpenMP timings for the heavy kernels; results must agree.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "semibrick/parallel.hpp"
#include "semibrick/serialize.hpp"

using namespace semibrick;

namespace {

double time_it(const std::function<std::string()>& body, std::string& result) {
  const auto start = std::chrono::steady_clock::now();
  result = body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string kernel_universe(const UniverseConfig& cfg) { return enumerate_universe(cfg)->fingerprint(); }

std::string kernel_tables(const UniverseConfig& cfg) {
  const auto u = enumerate_universe(cfg);
  const auto& c = u->conflation_table(ExactCtx::standard());
  const auto& m = u->morphism_table(ExactCtx::split());
  std::string out;
  for (const auto& t : c.triples) out += std::to_string(t.x.value) + "," + std::to_string(t.y.value) + "," + std::to_string(t.z.value) + ";";
  for (const auto& pr : m.pairs) out += class_set_to_json(pr.images).dump() + (pr.first_nonadmissible ? "n" : "a");
  return out;
}

std::string kernel_frombrick(const UniverseConfig& cfg) {
  const auto u = enumerate_universe(cfg);
  std::string out;
  for (const auto& s : enumerate_semibricks(*u)) out += std::to_string(check_frombrick(*u, ExactCtx::standard(), s).checked) + ";";
  return out;
}

std::string kernel_bijection(const UniverseConfig& cfg) {
  const auto u = enumerate_universe(cfg);
  return bijection_report_to_json(verify_bijection(*u, ExactCtx::standard())).dump();
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : 4;
  const UniverseConfig cfg{Quiver::linear(3), Prime(2), {2, 2, 2}};
  const std::pair<const char*, std::function<std::string(const UniverseConfig&)>> kernels[] = {
      {"universe", kernel_universe},
      {"tables", kernel_tables},
      {"frombrick", kernel_frombrick},
      {"bijection", kernel_bijection},
  };

  std::printf("A3 bound (2,2,2) over F_2, %d OpenMP threads\n", threads);
  std::printf("%-12s %10s %10s %8s  %s\n", "kernel", "serial s", "openmp s", "speedup", "match");
  int status = 0;
  for (const auto& [name, fn] : kernels) {
    std::string serial, parallel;
    double ts = 0, tp = 0;
    {
      par::ScopedBackend scope(par::Backend::Serial);
      ts = time_it([&] { return fn(cfg); }, serial);
    }
    {
      par::ScopedBackend scope(par::Backend::OpenMP);
      par::set_workers(threads);
      tp = time_it([&] { return fn(cfg); }, parallel);
    }
    const bool same = serial == parallel;
    if (!same) status = 1;
    std::printf("%-12s %10.3f %10.3f %8.2f  %s\n", name, ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
  }
  return status;
}
