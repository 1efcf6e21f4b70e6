// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "semibrick/parallel.hpp"
#include "semibrick/selftest.hpp"
#include "semibrick/serialize.hpp"

using namespace semibrick;

namespace {

const Prime F2{2};

std::shared_ptr<const Universe> a1() { return enumerate_universe({Quiver::linear(1), F2, {3}}); }
std::shared_ptr<const Universe> a2() { return enumerate_universe({Quiver::linear(2), F2, {2, 2}}); }
std::shared_ptr<const Universe> a3() { return enumerate_universe({Quiver::linear(3), F2, {1, 1, 1}}); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) o.require(secs < limit_s, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit_s) + " s");
  std::printf("%s criterion %d: %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", n, title.c_str(), secs, o.detail.str().c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

IsoClassId lookup(const Universe& u, Rep r) { return u.class_of(share(std::move(r))); }

}  // namespace

int main() {
  par::set_workers(1);

  criterion(1, "A2/F2/(2,2) standard bijection 5 <-> 5", 60, [](Outcome& o) {
    const auto u = a2();
    const auto r = verify_bijection(*u, ExactCtx::standard());
    o.detail << " semibricks=" << r.semibricks.size() << " wide=" << r.wide_subcats.size()
             << " failures=" << r.roundtrip_failures.size() << " unresolved=" << r.unresolved_truncations();
    o.require(r.semibricks.size() == 5, "5 semibricks");
    o.require(r.wide_subcats.size() == 5, "5 length wide subcategories");
    o.require(r.forward.size() == 5 && r.backward.size() == 5, "both maps total");
    o.require(r.pass(), "round trips are the identity with no ambiguity");
  });

  criterion(2, "A1/F2/3 bijection 2 <-> 2 in both structures", 5, [](Outcome& o) {
    const auto u = a1();
    for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
      const auto r = verify_bijection(*u, ctx);
      o.detail << " " << ctx.key() << "=" << r.semibricks.size() << "/" << r.wide_subcats.size();
      o.require(r.semibricks.size() == 2 && r.wide_subcats.size() == 2 && r.pass(), ctx.key());
    }
  });

  criterion(3, "abelian with the standard structure iff simples form a semibrick", 0, [](Outcome& o) {
    const auto u2 = a2();
    const auto st = verify_corollary(*u2, ExactCtx::standard());
    o.require(st.lhs && st.rhs, "A2 standard: both true");
    const auto sp = verify_corollary(*u2, ExactCtx::split());
    o.require(!sp.lhs && !sp.rhs, "A2 split: both false");
    o.require(sp.rhs_witness && !sp.rhs_witness->is_zero() && !sp.rhs_witness->is_iso(), "A2 split: witness");
    if (sp.rhs_witness) {
      o.require(sp.simples.contains(u2->class_of(sp.rhs_witness->src_ptr())) &&
                    sp.simples.contains(u2->class_of(sp.rhs_witness->dst_ptr())),
                "witness between split simples");
    }
    const auto a1s = verify_corollary(*a1(), ExactCtx::split());
    o.require(a1s.lhs && a1s.rhs, "A1 split: both true");
    o.detail << " morphisms=" << st.morphisms_checked + sp.morphisms_checked + a1s.morphisms_checked;
  });

  criterion(4, "Filt equals the smallest extension-closed subcategory", 0, [](Outcome& o) {
    std::size_t pairs = 0;
    for (const auto& u : {a1(), a2(), a3()}) {
      for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
        for (const auto& s : enumerate_semibricks(*u)) {
          const auto ext = smallest_ext_closed(*u, ctx, s);
          o.require(!ext.ambiguous(), "no unresolved truncation");
          o.require(ext.members == filt_closure(*u, ctx, s), "agreement");
          ++pairs;
        }
      }
    }
    o.detail << " pairs=" << pairs;
  });

  criterion(5, "morphisms out of a semibrick member are zero or inflations", 0, [](Outcome& o) {
    const auto u = a2();
    std::uint64_t checked = 0, violations = 0;
    for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
      for (const auto& s : enumerate_semibricks(*u)) {
        const auto r = check_frombrick(*u, ctx, s);
        checked += r.checked;
        violations += r.violations.size();
      }
    }
    o.detail << " triples=" << checked << " violations=" << violations;
    o.require(violations == 0 && checked > 0, "zero violations");
  });

  criterion(6, "split structure example on A2", 0, [](Outcome& o) {
    const auto u = a2();
    const auto q = u->quiver_ptr();
    const auto p1 = lookup(*u, Rep(q, F2, {1, 1}, {FpMatrix::from_rows(F2, {{1}})}));
    const auto r = run_split_example(*u);
    o.detail << " split=" << r.split_closure.size() << " standard=" << r.standard_closure.size();
    o.require(r.split_closure.size() == 9 && r.split_closure == r.semisimple, "Filt_split = 9 semisimples");
    o.require(r.standard_closure == u->all() && u->size() == 14, "Filt_standard = all 14");
    o.require(r.extension_witness && *r.extension_witness == p1, "extension witness P1");
    o.require(!is_wide(*u, ExactCtx::standard(), r.semisimple).condition_a.pass, "fails (a) under standard");
    o.require(is_wide(*u, ExactCtx::split(), r.semisimple).pass(), "wide under split");
    o.require(r.pass(), "report checks");
  });

  criterion(7, "invariant suites", 120, [](Outcome& o) {
    std::ostringstream log;
    const auto checks = run_selftest(log);
    std::size_t ok = 0;
    for (const auto& c : checks) {
      ok += c.pass;
      o.require(c.pass, c.name + ": " + c.detail);
    }
    o.detail << " " << ok << "/" << checks.size() << " suites";
  });

  return failures;
}
