#include <atomic>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "semibrick/parallel.hpp"

using namespace semibrick;

namespace {

struct Threads {
  explicit Threads(int n) : saved(par::workers()) { par::set_workers(n); }
  ~Threads() { par::set_workers(saved); }
  int saved;
};

}  // namespace

TEST_CASE("map keeps index order") {
  for (auto b : {par::Backend::Serial, par::Backend::OpenMP}) {
    Threads t(4);
    const auto out = par::map<std::size_t>(100, [](std::size_t i) { return i * i; }, b);
    REQUIRE(out.size() == 100);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == i * i);
  }
}

TEST_CASE("for_each visits every index once") {
  Threads t(4);
  std::vector<std::atomic<int>> hits(257);
  par::for_each(hits.size(), [&](std::size_t i) { hits[i]++; }, par::Backend::OpenMP);
  for (const auto& h : hits) CHECK(h.load() == 1);
  par::for_each(0, [&](std::size_t) { FAIL("called"); });
}

TEST_CASE("the lowest failing index wins") {
  Threads t(4);
  for (auto b : {par::Backend::Serial, par::Backend::OpenMP}) {
    try {
      par::for_each(64, [](std::size_t i) {
        if (i % 10 == 7) throw std::runtime_error(std::to_string(i));
      }, b);
      FAIL("no exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "7");
    }
  }
}

TEST_CASE("nested regions run inline") {
  Threads t(3);
  std::atomic<int> total{0};
  par::for_each(4, [&](std::size_t) { par::for_each(5, [&](std::size_t) { total++; }); }, par::Backend::OpenMP);
  CHECK(total.load() == 20);
}

TEST_CASE("serial and OpenMP kernels agree") {
  const UniverseConfig cfg{Quiver::linear(3), fixtures::F2, {2, 1, 1}};
  auto run = [&](par::Backend b) {
    par::ScopedBackend scope(b);
    Threads t(4);
    const auto u = enumerate_universe(cfg);
    Json j;
    j["universe"] = universe_to_json(*u);
    for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
      j[ctx.key()]["bijection"] = bijection_report_to_json(verify_bijection(*u, ctx));
      Json closures = Json::array();
      for (const auto& s : enumerate_semibricks(*u)) {
        const auto fc = filt_closure_with_certificates(*u, ctx, s);
        Json certs = Json::array();
        for (auto id : fc.members.ids()) certs.push_back(certificate_to_json(*fc.certificates[id.value]));
        closures.push_back({{"members", class_set_to_json(fc.members)},
                            {"certs", certs},
                            {"frombrick", frombrick_report_to_json(check_frombrick(*u, ctx, s))}});
      }
      j[ctx.key()]["closures"] = closures;
      j[ctx.key()]["simples"] = class_set_to_json(simples(*u, ctx));
    }
    return j.dump();
  };
  const auto serial = run(par::Backend::Serial);
  CHECK(serial == run(par::Backend::OpenMP));
  CHECK(serial == run(par::Backend::OpenMP));
}
