#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"

using namespace semibrick;
using fixtures::set_of;

namespace {

// Length wide subcategories by scanning every subset that contains zero.
std::vector<ClassSet> brute_length_wide(const Universe& u, const ExactCtx& ctx) {
  std::vector<ClassSet> out;
  const auto n = u.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    ClassSet w;
    w.insert(u.zero());
    for (std::size_t i = 1; i < n; ++i) {
      if (mask >> (i - 1) & 1) w.insert({static_cast<std::uint32_t>(i)});
    }
    bool closed = true;
    for (auto x : w.ids()) {
      for (auto y : w.ids()) {
        const auto s = u.sum_class(x, y);
        if (s && !w.contains(*s)) closed = false;
      }
    }
    if (closed && is_wide(u, ctx, w).pass() && is_length(u, ctx, w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassSet> sorted(std::vector<ClassSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("A2 standard bijection") {
  const auto& u = *fixtures::a2_universe();
  const auto ids = fixtures::a2_ids();
  const auto report = verify_bijection(u, ExactCtx::standard());
  CHECK(report.pass());
  CHECK(report.semibricks.size() == 5);
  CHECK(report.wide_subcats.size() == 5);
  CHECK(report.roundtrip_failures.empty());
  CHECK(report.unresolved_truncations() == 0);
  const auto expected = sorted({set_of({u.zero()}), filt_closure(u, ExactCtx::standard(), set_of({ids.s1})),
                                filt_closure(u, ExactCtx::standard(), set_of({ids.s2})),
                                filt_closure(u, ExactCtx::standard(), set_of({ids.p1})), u.all()});
  CHECK(sorted(report.wide_subcats) == expected);
  for (const auto& e : report.forward) CHECK(simples_of(u, ExactCtx::standard(), e.subcategory) == e.semibrick);
  for (const auto& e : report.backward) CHECK(filt_closure(u, ExactCtx::standard(), e.semibrick) == e.subcategory);
  bool empty_seen = false;
  for (const auto& e : report.forward) {
    if (e.semibrick.empty()) {
      empty_seen = true;
      CHECK(e.subcategory == set_of({u.zero()}));
    }
  }
  CHECK(empty_seen);
}

TEST_CASE("subset search agrees with a full scan") {
  for (const auto& u : {fixtures::a1_universe(), fixtures::a2_universe()}) {
    for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
      const auto brute = brute_length_wide(*u, ctx);
      CHECK(sorted(enumerate_length_wide(*u, ctx, SearchMode::Pruned)) == brute);
      CHECK(sorted(enumerate_length_wide(*u, ctx, SearchMode::SumClosedOnly)) == brute);
    }
  }
}

TEST_CASE("bijection on every preset and structure") {
  for (const auto& u : {fixtures::a1_universe(), fixtures::a2_universe(), fixtures::a3_universe()}) {
    const auto semibricks = enumerate_semibricks(*u);
    std::vector<std::vector<ClassSet>> images;
    for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
      const auto report = verify_bijection(*u, ctx);
      CHECK(report.pass());
      CHECK(report.semibricks == semibricks);
      CHECK(report.wide_subcats.size() == semibricks.size());
      images.push_back(sorted(report.wide_subcats));
    }
    // same semibricks, different subcategories unless the algebra is semisimple
    if (u->quiver().arrow_count() > 0) CHECK(images[0] != images[1]);
  }
  const auto a1 = verify_bijection(*fixtures::a1_universe(), ExactCtx::split());
  CHECK(a1.semibricks.size() == 2);
}

TEST_CASE("node budget") {
  CHECK_THROWS_AS(verify_bijection(*fixtures::a2_universe(), ExactCtx::standard(), SearchMode::SumClosedOnly, 3),
                  BudgetError);
}

TEST_CASE("corollary") {
  const auto ids = fixtures::a2_ids();
  const auto& a2 = *fixtures::a2_universe();
  const auto st = verify_corollary(a2, ExactCtx::standard());
  CHECK(st.lhs);
  CHECK(st.rhs);
  CHECK(st.pass());
  CHECK(st.simples == set_of({ids.s1, ids.s2}));

  const auto sp = verify_corollary(a2, ExactCtx::split());
  CHECK_FALSE(sp.lhs);
  CHECK_FALSE(sp.rhs);
  CHECK(sp.pass());
  REQUIRE(sp.rhs_witness);
  CHECK_FALSE(sp.rhs_witness->is_zero());
  CHECK_FALSE(sp.rhs_witness->is_iso());
  CHECK(sp.simples.contains(a2.class_of(sp.rhs_witness->src_ptr())));
  CHECK(sp.simples.contains(a2.class_of(sp.rhs_witness->dst_ptr())));

  const auto a1 = verify_corollary(*fixtures::a1_universe(), ExactCtx::split());
  CHECK(a1.lhs);
  CHECK(a1.rhs);
}

TEST_CASE("corollary needs a length category") {
  const auto& u = *fixtures::a2_universe();
  // Some restriction of the standard structure is not length; find one.
  std::optional<ExactCtx> non_length;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (u.size() - 1)) && !non_length; ++mask) {
    ClassSet w;
    w.insert(u.zero());
    for (std::size_t i = 1; i < u.size(); ++i) {
      if (mask >> (i - 1) & 1) w.insert({static_cast<std::uint32_t>(i)});
    }
    const auto ctx = ExactCtx::standard().restricted_to(u, w);
    if (!w.is_subset_of(filt_closure(u, ctx, simples(u, ctx)))) non_length = ctx;
  }
  REQUIRE(non_length);
  CHECK_THROWS_AS(verify_corollary(u, *non_length), PreconditionFailed);
}

TEST_CASE("split example") {
  const auto ids = fixtures::a2_ids();
  const auto r = run_split_example(*fixtures::a2_universe());
  CHECK(r.pass());
  CHECK(r.simples == set_of({ids.s1, ids.s2}));
  CHECK(r.semisimple.size() == 9);
  CHECK(r.split_closure == r.semisimple);
  CHECK(r.standard_closure.size() == 14);
  REQUIRE(r.extension_witness);
  CHECK(*r.extension_witness == ids.p1);
  CHECK_FALSE(r.semisimple_algebra);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name);

  const auto a1 = run_split_example(*fixtures::a1_universe());
  CHECK(a1.pass());
  CHECK(a1.semisimple_algebra);
  CHECK(a1.split_closure == a1.standard_closure);

  const auto z = run_split_example(*enumerate_universe({Quiver::linear(2), fixtures::F2, {0, 0}}));
  CHECK(z.pass());
}

TEST_CASE("sum closure") {
  const auto& u = *fixtures::a2_universe();
  const auto ids = fixtures::a2_ids();
  CHECK(sum_closure(u, ClassSet{}) == set_of({u.zero()}));
  CHECK(sum_closure(u, set_of({ids.p1})) ==
        set_of({u.zero(), ids.p1, fixtures::sum_of(u, {ids.p1, ids.p1})}));
}
