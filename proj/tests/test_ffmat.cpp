#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace semibrick;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, Prime p, std::size_t r, std::size_t c) {
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::int64_t>(rng() % p.value()));
  }
  return m;
}

FpMatrix loop_mul(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix c(a.prime(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += static_cast<std::int64_t>(a(i, k)) * b(k, j);
      c.set(i, j, acc);
    }
  }
  return c;
}

// Every vector of F_p^n, as columns.
std::vector<FpMatrix> all_vectors(Prime p, std::size_t n) {
  std::vector<FpMatrix> out;
  const std::uint64_t total = saturating_pow(p.value(), n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    FpMatrix v(p, n, 1);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i, rest /= p.value()) v.set(i, 0, static_cast<std::int64_t>(rest % p.value()));
    out.push_back(v);
  }
  return out;
}

// rank = log_p of the number of distinct vectors A x.
std::size_t span_rank(const FpMatrix& a) {
  std::set<std::vector<Residue>> images;
  for (const auto& x : all_vectors(a.prime(), a.cols())) {
    const auto y = loop_mul(a, x);
    images.insert(std::vector<Residue>(y.entries().begin(), y.entries().end()));
  }
  std::size_t r = 0;
  for (std::size_t n = images.size(); n > 1; n /= a.prime().value()) ++r;
  return r;
}

}  // namespace

TEST_CASE("prime validation and field arithmetic") {
  CHECK_THROWS_AS(Prime(4), InvalidArgument);
  CHECK_THROWS_AS(Prime(1), InvalidArgument);
  CHECK_THROWS_AS(Prime(65537), InvalidArgument);
  const Prime p(7);
  for (Residue a = 1; a < 7; ++a) CHECK(p.mul(a, p.inv(a)) == 1);
  CHECK(p.reduce(-1) == 6);
  CHECK(p.add(p.neg(3), 3) == 0);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
}

TEST_CASE("shape checks") {
  const Prime p(3);
  CHECK_THROWS_AS(mat_mul(FpMatrix(p, 2, 3), FpMatrix(p, 2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(mat_add(FpMatrix(p, 2, 3), FpMatrix(p, 3, 2)), DimensionMismatch);
  CHECK_THROWS_AS(mat_mul(FpMatrix(Prime(2), 1, 1), FpMatrix(p, 1, 1)), FieldMismatch);
  CHECK_THROWS_AS(try_inverse(FpMatrix(p, 2, 3)), NotSquare);
}

TEST_CASE("product agrees with a scalar loop") {
  std::mt19937_64 rng(11);
  for (std::uint64_t pv : {2u, 3u, 7u}) {
    const Prime p(pv);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_matrix(rng, p, rng() % 5, 1 + rng() % 4);
      const auto b = random_matrix(rng, p, a.cols(), rng() % 5);
      CHECK(a * b == loop_mul(a, b));
    }
  }
}

TEST_CASE("rank, kernel and affine solutions against exhaustive scans") {
  std::mt19937_64 rng(12);
  for (std::uint64_t pv : {2u, 3u}) {
    const Prime p(pv);
    for (int t = 0; t < 60; ++t) {
      const auto a = random_matrix(rng, p, 1 + rng() % 4, 1 + rng() % 4);
      CHECK(rank(a) == span_rank(a));
      CHECK(rank(a) == rank(a.transpose()));

      std::size_t null = 0;
      for (const auto& x : all_vectors(p, a.cols())) null += loop_mul(a, x).is_zero();
      CHECK(saturating_pow(p.value(), kernel_basis(a).size()) == null);

      const auto b = random_matrix(rng, p, a.rows(), 1);
      std::vector<std::vector<Residue>> brute;
      for (const auto& x : all_vectors(p, a.cols())) {
        if (loop_mul(a, x) == b) brute.emplace_back(x.entries().begin(), x.entries().end());
      }
      const auto sol = solve_affine(a, b);
      if (brute.empty()) {
        CHECK_FALSE(sol.has_value());
        continue;
      }
      REQUIRE(sol.has_value());
      REQUIRE(sol->count() == brute.size());
      std::set<std::vector<Residue>> found;
      for (std::uint64_t i = 0; i < sol->count(); ++i) {
        const auto x = sol->element(i);
        found.emplace(x.entries().begin(), x.entries().end());
      }
      CHECK(found == std::set<std::vector<Residue>>(brute.begin(), brute.end()));
    }
  }
}

TEST_CASE("inverse and basis completion") {
  std::mt19937_64 rng(13);
  const Prime p(5);
  int invertible = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = random_matrix(rng, p, n, n);
    const auto inv = try_inverse(a);
    CHECK(inv.has_value() == (rank(a) == n));
    if (inv) {
      ++invertible;
      CHECK((a * *inv).is_identity());
    }
  }
  CHECK(invertible > 0);

  const auto b = FpMatrix::from_rows(p, {{1, 0}, {2, 0}, {0, 1}});
  const auto done = complete_basis(b);
  const auto full = hstack(b, done.complement);
  CHECK(full.cols() == 3);
  CHECK((done.inverse * full).is_identity());
  CHECK((left_inverse(b) * b).is_identity());
}

TEST_CASE("block constructions") {
  const Prime p(3);
  const auto a = FpMatrix::from_rows(p, {{1, 2}});
  const auto b = FpMatrix::from_rows(p, {{2}, {1}});
  const auto d = block_diag(a, b);
  CHECK(d.rows() == 3);
  CHECK(d.cols() == 3);
  CHECK(d == FpMatrix::from_rows(p, {{1, 2, 0}, {0, 0, 2}, {0, 0, 1}}));
  CHECK(hstack(a, a).cols() == 4);
  CHECK(vstack(a, a).rows() == 2);
  CHECK(FpMatrix::from_rows(p, {{-1, 4}}) == FpMatrix::from_rows(p, {{2, 1}}));
}
