#pragma once

// Dense matrices over prime fields F_p with exact Gaussian elimination.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "semibrick/errors.hpp"

namespace semibrick {

using Residue = std::uint32_t;

inline constexpr std::uint64_t kDefaultPrimeCeiling = 1u << 16;

/// A validated prime modulus.
class Prime {
 public:
  /// Throws InvalidArgument unless `p` is prime and at most `ceiling`.
  explicit Prime(std::uint64_t p, std::uint64_t ceiling = kDefaultPrimeCeiling);

  Residue value() const noexcept { return p_; }
  Residue reduce(std::int64_t x) const noexcept;
  Residue add(Residue a, Residue b) const noexcept { return static_cast<Residue>((std::uint64_t{a} + b) % p_); }
  Residue sub(Residue a, Residue b) const noexcept { return static_cast<Residue>((std::uint64_t{a} + p_ - b) % p_); }
  Residue mul(Residue a, Residue b) const noexcept { return static_cast<Residue>((std::uint64_t{a} * b) % p_); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  /// Multiplicative inverse; `a` must be nonzero.
  Residue inv(Residue a) const noexcept;

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  Residue p_;
};

bool is_prime(std::uint64_t n) noexcept;

class FpMatrix {
 public:
  FpMatrix(Prime p, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p.
  static FpMatrix from_rows(Prime p, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static FpMatrix from_rows(Prime p, const std::vector<std::vector<std::int64_t>>& rows);
  static FpMatrix identity(Prime p, std::size_t n);
  /// Column vector from residues.
  static FpMatrix column(Prime p, std::span<const Residue> entries);

  Prime prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) { entries_[r * cols_ + c] = p_.reduce(value); }
  std::span<const Residue> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  FpMatrix transpose() const;
  FpMatrix col(std::size_t c) const;
  FpMatrix select_cols(std::span<const std::size_t> indices) const;
  FpMatrix select_rows(std::size_t first, std::size_t count) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  Prime p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_add(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_sub(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_scale(const FpMatrix& a, Residue s);
inline FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return mat_mul(a, b); }
inline FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) { return mat_add(a, b); }
inline FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) { return mat_sub(a, b); }

/// [a | b]; row counts must agree.
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
/// [a ; b]; column counts must agree.
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
/// Block-diagonal [[a, 0], [0, b]].
FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b);

struct RowEchelon {
  FpMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form, first-nonzero pivoting.
RowEchelon rref(const FpMatrix& a);
std::size_t rank(const FpMatrix& a);

/// Basis of {v : a v = 0}, one column vector per free column, in column order.
std::vector<FpMatrix> kernel_basis(const FpMatrix& a);

/// All x with A x = b: particular + span(kernel).
class SolutionSet {
 public:
  SolutionSet(FpMatrix particular, std::vector<FpMatrix> kernel);

  const FpMatrix& particular() const noexcept { return particular_; }
  const std::vector<FpMatrix>& kernel() const noexcept { return kernel_; }
  /// p^(dim kernel), saturating at UINT64_MAX.
  std::uint64_t count() const noexcept;
  /// The `index`-th solution, base-p digits of `index` as kernel coefficients.
  FpMatrix element(std::uint64_t index) const;

 private:
  FpMatrix particular_;
  std::vector<FpMatrix> kernel_;
};

/// nullopt signals an inconsistent system.
std::optional<SolutionSet> solve_affine(const FpMatrix& A, const FpMatrix& b);

/// Throws NotSquare for non-square input; nullopt when singular.
std::optional<FpMatrix> try_inverse(const FpMatrix& A);

/// Columns of `a` at its pivot positions: a basis of the column space.
FpMatrix column_space_basis(const FpMatrix& a);

struct BasisCompletion {
  FpMatrix complement;    // n x (n - r) standard basis vectors completing the columns of `basis`
  FpMatrix inverse;       // inverse of [basis | complement]
};

/// `basis` must have linearly independent columns.
BasisCompletion complete_basis(const FpMatrix& basis);

/// L with L * a == I; `a` must have full column rank.
FpMatrix left_inverse(const FpMatrix& a);

/// p^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t exponent) noexcept;

}  // namespace semibrick
