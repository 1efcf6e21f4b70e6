#include "semibrick/ffmat.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace semibrick {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p, std::uint64_t ceiling) : p_(0) {
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  if (p > ceiling) {
    throw InvalidArgument("prime " + std::to_string(p) + " exceeds ceiling " + std::to_string(ceiling));
  }
  p_ = static_cast<Residue>(p);
}

Residue Prime::reduce(std::int64_t x) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  auto r = x % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

Residue Prime::inv(Residue a) const noexcept {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(Prime p, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(p, copy);
}

FpMatrix FpMatrix::from_rows(Prime p, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::identity(Prime p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::column(Prime p, std::span<const Residue> entries) {
  FpMatrix m(p, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.entries_[i] = entries[i] % p.value();
  return m;
}

bool FpMatrix::is_zero() const noexcept {
  for (auto e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

bool FpMatrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (entries_[r * cols_ + c] != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  }
  return t;
}

FpMatrix FpMatrix::col(std::size_t c) const {
  FpMatrix v(p_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v.entries_[r] = entries_[r * cols_ + c];
  return v;
}

FpMatrix FpMatrix::select_cols(std::span<const std::size_t> indices) const {
  FpMatrix m(p_, rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < indices.size(); ++j) m.entries_[r * indices.size() + j] = entries_[r * cols_ + indices[j]];
  }
  return m;
}

FpMatrix FpMatrix::select_rows(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionMismatch("row range out of range");
  FpMatrix m(p_, count, cols_);
  std::copy(entries_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), m.entries_.begin());
  return m;
}

namespace {

void require_same_field(const FpMatrix& a, const FpMatrix& b) {
  if (a.prime() != b.prime()) throw FieldMismatch("matrices over different fields");
}

}  // namespace

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const Prime p = a.prime();
  FpMatrix c(p, a.rows(), b.cols());
  const auto pv = std::uint64_t{p.value()};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = (acc + std::uint64_t{a(i, k)} * b(k, j)) % pv;
      c.set(i, j, static_cast<std::int64_t>(acc));
    }
  }
  return c;
}

FpMatrix mat_add(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_add shape mismatch");
  FpMatrix c(a.prime(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.prime().add(a(i, j), b(i, j)));
  }
  return c;
}

FpMatrix mat_sub(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_sub shape mismatch");
  FpMatrix c(a.prime(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.prime().sub(a(i, j), b(i, j)));
  }
  return c;
}

FpMatrix mat_scale(const FpMatrix& a, Residue s) {
  FpMatrix c(a.prime(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.prime().mul(a(i, j), s % a.prime().value()));
  }
  return c;
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  FpMatrix c(a.prime(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b(i, j));
  }
  return c;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  FpMatrix c(a.prime(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(a.rows() + i, j, b(i, j));
  }
  return c;
}

FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  FpMatrix c(a.prime(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(a.rows() + i, a.cols() + j, b(i, j));
  }
  return c;
}

RowEchelon rref(const FpMatrix& a) {
  const Prime p = a.prime();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<Residue> m(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> Residue& { return m[r * cols + c]; };

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = row; r < rows; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(row, j));
    }
    const Residue scale = p.inv(at(row, c));
    for (std::size_t j = c; j < cols; ++j) at(row, j) = p.mul(at(row, j), scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || at(r, c) == 0) continue;
      const Residue factor = at(r, c);
      for (std::size_t j = c; j < cols; ++j) at(r, j) = p.sub(at(r, j), p.mul(factor, at(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }

  FpMatrix reduced(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) reduced.set(r, c, at(r, c));
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const FpMatrix& a) { return rref(a).pivots.size(); }

std::vector<FpMatrix> kernel_basis(const FpMatrix& a) {
  const Prime p = a.prime();
  const auto echelon = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : echelon.pivots) is_pivot[c] = true;

  std::vector<FpMatrix> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpMatrix v(p, a.cols(), 1);
    v.set(free, 0, 1);
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
      v.set(echelon.pivots[r], 0, p.neg(echelon.reduced(r, free)));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SolutionSet::SolutionSet(FpMatrix particular, std::vector<FpMatrix> kernel)
    : particular_(std::move(particular)), kernel_(std::move(kernel)) {}

std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t exponent) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    result *= p;
  }
  return result;
}

std::uint64_t SolutionSet::count() const noexcept {
  return saturating_pow(particular_.prime().value(), kernel_.size());
}

FpMatrix SolutionSet::element(std::uint64_t index) const {
  const Prime p = particular_.prime();
  FpMatrix x = particular_;
  for (const auto& k : kernel_) {
    const auto digit = static_cast<Residue>(index % p.value());
    index /= p.value();
    if (digit != 0) x = mat_add(x, mat_scale(k, digit));
  }
  return x;
}

std::optional<SolutionSet> solve_affine(const FpMatrix& A, const FpMatrix& b) {
  if (A.rows() != b.rows() || b.cols() != 1) throw DimensionMismatch("solve_affine: b must be a column of A.rows entries");
  require_same_field(A, b);
  const Prime p = A.prime();
  const auto echelon = rref(hstack(A, b));
  const std::size_t n = A.cols();
  for (auto c : echelon.pivots) {
    if (c == n) return std::nullopt;
  }
  FpMatrix particular(p, n, 1);
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r) particular.set(echelon.pivots[r], 0, echelon.reduced(r, n));
  return SolutionSet(std::move(particular), kernel_basis(A));
}

std::optional<FpMatrix> try_inverse(const FpMatrix& A) {
  if (A.rows() != A.cols()) throw NotSquare("try_inverse on " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
  const std::size_t n = A.rows();
  const auto echelon = rref(hstack(A, FpMatrix::identity(A.prime(), n)));
  if (echelon.pivots.size() < n || (n > 0 && echelon.pivots[n - 1] >= n)) return std::nullopt;
  FpMatrix inv(A.prime(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, echelon.reduced(r, n + c));
  }
  return inv;
}

FpMatrix column_space_basis(const FpMatrix& a) {
  const auto echelon = rref(a);
  return a.select_cols(echelon.pivots);
}

BasisCompletion complete_basis(const FpMatrix& basis) {
  const Prime p = basis.prime();
  const std::size_t n = basis.rows();
  const std::size_t r = basis.cols();
  const auto echelon = rref(hstack(basis, FpMatrix::identity(p, n)));
  if (echelon.pivots.size() < r || (r > 0 && echelon.pivots[r - 1] != r - 1)) {
    throw InvalidArgument("complete_basis: columns are linearly dependent");
  }
  std::vector<std::size_t> extra;
  for (std::size_t i = r; i < echelon.pivots.size(); ++i) extra.push_back(echelon.pivots[i] - r);
  FpMatrix complement = FpMatrix::identity(p, n).select_cols(extra);
  auto inverse = try_inverse(hstack(basis, complement));
  return {std::move(complement), std::move(*inverse)};
}

FpMatrix left_inverse(const FpMatrix& a) {
  return complete_basis(a).inverse.select_rows(0, a.cols());
}

}  // namespace semibrick
