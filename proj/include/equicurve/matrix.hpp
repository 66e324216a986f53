#pragma once

#include <optional>
#include <vector>

#include "equicurve/field.hpp"

namespace equicurve {

using Vec = std::vector<Fq>;

// Dense row-major matrix over GF(q).
class Matrix {
 public:
  Matrix(const GaloisField& field, int rows, int cols);
  Matrix(const GaloisField& field, const std::vector<Vec>& rows, int cols);

  static Matrix identity(const GaloisField& field, int n);
  static Matrix from_ints(const GaloisField& field, const std::vector<std::vector<std::int64_t>>& rows);

  const GaloisField& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fq& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  Fq operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  Vec row(int r) const;
  Vec col(int c) const;

  Matrix transpose() const;
  // Reduced row echelon form; pivot columns are returned through the optional pointer.
  Matrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  bool is_identity() const;
  std::optional<Matrix> inverse() const;
  // Some x with A x = b, if any.
  std::optional<Vec> solve(const Vec& b) const;
  Vec apply(const Vec& v) const;

  Matrix operator-(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<std::vector<std::uint32_t>> encodings() const;

 private:
  const GaloisField* field_;
  int rows_;
  int cols_;
  std::vector<Fq> data_;
};

// Basis of the right kernel, as the rows of a reduced echelon matrix.
std::vector<Vec> kernel_basis(const Matrix& m);
// Rows of the reduced echelon form of the span of the given vectors, zero rows dropped.
std::vector<Vec> echelon_span(const std::vector<Vec>& vectors, const GaloisField& field, int dim);
Matrix vstack(const std::vector<Matrix>& blocks);

}  // namespace equicurve
