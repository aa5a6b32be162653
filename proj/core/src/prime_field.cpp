#include "grm/prime_field.hpp"

#include <algorithm>
#include <utility>

#include "grm/errors.hpp"

namespace grm {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p > 97) throw InputError("field characteristic must lie in 2..97");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("field characteristic must be prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw InputError("division by zero in prime field");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

FpMat::FpMat(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), p_(field.p()), a_(rows * cols, 0) {}

FpMat FpMat::identity(std::size_t n, PrimeField field) {
  FpMat m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FpMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

FpMat FpMat::mul(const FpMat& rhs) const {
  FpMat out(rows_, rhs.cols_, field());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t v = (*this)(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = (out(i, j) + v * rhs(k, j)) % p_;
    }
  return out;
}

FpMat FpMat::add(const FpMat& rhs) const {
  FpMat out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (out.a_[i] + rhs.a_[i]) % p_;
  return out;
}

FpMat FpMat::sub(const FpMat& rhs) const {
  FpMat out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (out.a_[i] + p_ - rhs.a_[i]) % p_;
  return out;
}

FpMat FpMat::scale(std::uint32_t c) const {
  FpMat out = *this;
  for (auto& v : out.a_) v = (v * c) % p_;
  return out;
}

FpMat FpMat::transpose() const {
  FpMat out(cols_, rows_, field());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

FpMat FpMat::hconcat(const FpMat& rhs) const {
  FpMat out(rows_, cols_ + rhs.cols_, field());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

FpMat FpMat::vconcat(const FpMat& below) const {
  FpMat out(rows_ + below.rows_, cols_, field());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = below(i, j);
  return out;
}

FpMat FpMat::row_slice(std::size_t first, std::size_t last) const {
  FpMat out(last - first, cols_, field());
  for (std::size_t i = first; i < last; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i - first, j) = (*this)(i, j);
  return out;
}

namespace {

struct Echelon {
  FpMat mat;                        // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

Echelon row_reduce(FpMat m) {
  PrimeField f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    std::uint32_t inv = f.inv(m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      std::uint32_t factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t FpMat::rank() const { return row_reduce(*this).pivots.size(); }

FpMat FpMat::kernel_basis() const {
  Echelon e = row_reduce(*this);
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t c : e.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  PrimeField f = field();
  FpMat basis(cols_, free_cols.size(), f);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], k) = f.neg(e.mat(r, fc));
  }
  return basis;
}

FpMat FpMat::column_space_basis() const {
  Echelon e = row_reduce(*this);
  FpMat basis(rows_, e.pivots.size(), field());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) basis(i, k) = (*this)(i, e.pivots[k]);
  return basis;
}

std::vector<std::size_t> FpMat::pivot_rows() const {
  return row_reduce(transpose()).pivots;
}

FpMat::Solution FpMat::solve(const FpMat& rhs) const {
  Echelon e = row_reduce(hconcat(rhs));
  Solution s;
  for (std::size_t c : e.pivots)
    if (c >= cols_) return s;  // pivot in the rhs block: inconsistent
  s.ok = true;
  s.x = FpMat(cols_, rhs.cols(), field());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      s.x(e.pivots[r], j) = e.mat(r, cols_ + j);
  return s;
}

FpMat::Solution FpMat::inverse() const {
  Solution s;
  if (rows_ != cols_) return s;
  s = solve(identity(rows_, field()));
  if (s.ok && !(mul(s.x) == identity(rows_, field()))) s.ok = false;
  return s;
}

}  // namespace grm
