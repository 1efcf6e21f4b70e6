#include "doctest.h"
#include "fixtures.hpp"

using namespace semibrick;
using fixtures::A2;
using fixtures::F2;

namespace {

// All matrices of a shape over F_p.
std::vector<FpMatrix> all_matrices(Prime p, std::size_t r, std::size_t c) {
  std::vector<FpMatrix> out;
  const std::uint64_t total = saturating_pow(p.value(), r * c);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    FpMatrix m(p, r, c);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j, rest /= p.value()) m.set(i, j, static_cast<std::int64_t>(rest % p.value()));
    }
    out.push_back(m);
  }
  return out;
}

// Number of vertex-matrix tuples satisfying every commuting square.
std::uint64_t brute_hom_count(const Rep& x, const Rep& y) {
  const auto& q = x.quiver();
  std::vector<std::vector<FpMatrix>> choices;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) choices.push_back(all_matrices(x.prime(), y.dim(v), x.dim(v)));
  std::uint64_t count = 0;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < q.arrow_count() && ok; ++a) {
      const auto& arrow = q.arrows()[a];
      ok = choices[arrow.target][pick[arrow.target]] * x.mat(a) == y.mat(a) * choices[arrow.source][pick[arrow.source]];
    }
    count += ok;
    std::size_t v = 0;
    while (v < pick.size() && ++pick[v] == choices[v].size()) pick[v++] = 0;
    if (v == pick.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), InvalidArgument);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "3"}}), InvalidArgument);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}), InvalidArgument);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}), InvalidArgument);
  CHECK_THROWS_AS(Quiver({"1"}, {{"loop", "1", "1"}}), InvalidArgument);
  const auto q = Quiver::linear(3);
  CHECK(q->vertex_count() == 3);
  CHECK(q->arrow_count() == 2);
  CHECK(q->arrows()[1].name == "b");
}

TEST_CASE("representation and morphism validation") {
  const A2 a;
  CHECK_THROWS_AS(Rep(a.q, F2, {1, 1}, {FpMatrix(F2, 2, 1)}), DimensionMismatch);
  // The identity at vertex 1 alone does not commute with P1's arrow.
  CHECK_THROWS_AS(Mor(a.p1, a.p1, {FpMatrix::from_rows(F2, {{1}}), FpMatrix::from_rows(F2, {{0}})}), InvalidMorphism);
  const auto foreign = share(Rep::simple(Quiver::linear(3), F2, 0));
  CHECK_THROWS(hom_space(a.s1, foreign));
  const auto f3 = share(Rep::simple(a.q, Prime(3), 0));
  CHECK_THROWS_AS(hom_space(a.s1, f3), FieldMismatch);
}

TEST_CASE("hom spaces against an exhaustive scan") {
  const A2 a;
  CHECK(hom_space(a.s1, a.s2).dim() == 0);
  CHECK(hom_space(a.p1, a.s1).dim() == 1);
  CHECK(hom_space(a.zero, a.zero).dim() == 0);
  CHECK(hom_space(a.s2, a.p1).dim() == 1);
  CHECK(hom_space(a.p1, a.s2).dim() == 0);

  const auto u = fixtures::a2_universe();
  for (auto x : u->ids()) {
    for (auto y : u->ids()) {
      const auto& h = u->hom(x, y);
      CHECK(h.count() == brute_hom_count(u->rep(x), u->rep(y)));
      for (std::uint64_t i = 0; i < h.count(); ++i) CHECK(h.element(i).is_valid());
    }
  }
}

TEST_CASE("hom dimension is additive in the source") {
  const auto u = fixtures::a2_universe();
  for (auto x : u->ids()) {
    for (auto y : u->ids()) {
      const auto sum = direct_sum(u->rep_ptr(x), u->rep_ptr(y));
      for (auto z : u->ids()) {
        CHECK(hom_space(sum.object, u->rep_ptr(z)).dim() == u->hom(x, z).dim() + u->hom(y, z).dim());
      }
    }
  }
}

TEST_CASE("kernels and cokernels") {
  const A2 a;
  const auto id = Mor::identity(a.p1);
  CHECK(kernel_of(id).object->is_zero());
  CHECK(cokernel_of(id).object->is_zero());

  const auto zero = Mor::zero(a.s1, a.s1);
  CHECK(is_isomorphic(kernel_of(zero).object, a.s1));
  CHECK(is_isomorphic(cokernel_of(zero).object, a.s1));

  const auto f = a.s2_to_p1();
  const auto coker = cokernel_of(f);
  CHECK(is_isomorphic(coker.object, a.s1));
  CHECK(compose(coker.projection, f).is_zero());
  CHECK(kernel_of(f).object->is_zero());

  const auto img = image_factorization(a.p1_to_s1());
  CHECK(is_isomorphic(img.image, a.s1));
  CHECK(img.deflation.is_surjective());
  CHECK(img.inflation.is_injective());
}

TEST_CASE("isomorphism search") {
  const A2 a;
  const auto iso = is_isomorphic(a.p1, a.p1);
  REQUIRE(iso);
  CHECK(iso->is_iso());
  CHECK_FALSE(is_isomorphic(a.s1, a.s2));

  const auto m = share(Rep(a.q, F2, {2, 2}, {FpMatrix::identity(F2, 2)}));
  const auto pp = direct_sum(a.p1, a.p1).object;
  const auto found = is_isomorphic(m, pp);
  REQUIRE(found);
  CHECK(found->is_valid());
  CHECK(found->is_iso());
  const auto back = try_inverse(*found);
  REQUIRE(back);
  CHECK(compose(*back, *found).comps() == Mor::identity(m).comps());

  // S1 ⊕ S2 and P1 share dims but not the arrow rank.
  CHECK_FALSE(is_isomorphic(direct_sum(a.s1, a.s2).object, a.p1));
}

TEST_CASE("endomorphism enumeration") {
  const A2 a;
  CHECK(end_elements(a.s1).size() == 2);
  CHECK(end_elements(a.p1).size() == 2);
  CHECK(end_elements(direct_sum(a.s1, a.s1).object).size() == 16);
  CHECK_THROWS_AS(end_elements(direct_sum(a.s1, a.s1).object, 8), EnumerationTooLarge);
}

TEST_CASE("composition laws") {
  const auto u = fixtures::a2_universe();
  for (auto x : u->ids()) {
    for (auto y : u->ids()) {
      const auto& hxy = u->hom(x, y);
      if (hxy.dim() == 0) continue;
      const auto f = hxy.element(hxy.count() - 1);
      CHECK(compose(f, Mor::identity(u->rep_ptr(x))).comps() == f.comps());
      CHECK(compose(Mor::identity(u->rep_ptr(y)), f).comps() == f.comps());
      for (auto z : u->ids()) {
        const auto& hyz = u->hom(y, z);
        if (hyz.dim() == 0) continue;
        const auto g = hyz.element(hyz.count() - 1);
        const auto gf = compose(g, f);
        CHECK(gf.is_valid());
        CHECK(compose(g, mor_add(f, f)).comps() == mor_add(gf, gf).comps());
      }
    }
  }
}
