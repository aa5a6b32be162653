#pragma once

#include <cstdint>
#include <vector>

namespace grm {

/// The field Z/p for a prime p in 2..97.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Dense matrix over a prime field; all eliminations are exact. Zero-sized
/// shapes (0 x n, n x 0) are valid and show up routinely as kernels and
/// cokernels of maps touching zero spaces.
class FpMat {
 public:
  FpMat() : rows_(0), cols_(0), p_(2) {}
  FpMat(std::size_t rows, std::size_t cols, PrimeField field);

  static FpMat identity(std::size_t n, PrimeField field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  PrimeField field() const { return PrimeField(p_); }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const FpMat&) const = default;

  FpMat mul(const FpMat& rhs) const;
  FpMat add(const FpMat& rhs) const;
  FpMat sub(const FpMat& rhs) const;
  FpMat scale(std::uint32_t c) const;
  FpMat transpose() const;
  FpMat hconcat(const FpMat& rhs) const;
  FpMat vconcat(const FpMat& below) const;
  FpMat row_slice(std::size_t first, std::size_t last) const;  // rows [first, last)

  std::size_t rank() const;
  bool full_column_rank() const { return rank() == cols_; }

  /// Columns form a basis of the right null space; deterministic (reduced
  /// echelon, free columns in ascending order).
  FpMat kernel_basis() const;

  /// The original columns sitting at the pivot positions of the reduced
  /// echelon form; a deterministic basis of the column space.
  FpMat column_space_basis() const;

  /// Row indices containing the leading entries of the column space (the
  /// pivot rows of the column echelon form).
  std::vector<std::size_t> pivot_rows() const;

  /// Solves (*this) * X = rhs; empty if inconsistent. Free variables are 0.
  struct Solution {
    bool ok = false;
    FpMat x;
  };
  Solution solve(const FpMat& rhs) const;

  Solution inverse() const;

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

}  // namespace grm
