#include "equicurve/matrix.hpp"

#include "equicurve/errors.hpp"

namespace equicurve {

Matrix::Matrix(const GaloisField& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field.zero()) {}

Matrix::Matrix(const GaloisField& field, const std::vector<Vec>& rows, int cols)
    : Matrix(field, static_cast<int>(rows.size()), cols) {
  for (int r = 0; r < rows_; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols) {
      throw Error(ErrorCode::Internal, "ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) (*this)(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
}

Matrix Matrix::identity(const GaloisField& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(const GaloisField& field, const std::vector<std::vector<std::int64_t>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix m(field, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

Vec Matrix::row(int r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(int c) const {
  Vec v;
  v.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(*field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m = *this;
  std::vector<int> piv;
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int sel = -1;
    for (int r = lead; r < rows_; ++r) {
      if (!m(r, c).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != lead) {
      for (int k = 0; k < cols_; ++k) std::swap(m(sel, k), m(lead, k));
    }
    const Fq inv = m(lead, c).inverse();
    for (int k = c; k < cols_; ++k) m(lead, k) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Fq factor = m(r, c);
      for (int k = c; k < cols_; ++k) m(r, k) -= factor * m(lead, k);
    }
    piv.push_back(c);
    ++lead;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

int Matrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(*field_, rows_);
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug(*field_, rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_ + r) = field_->one();
  }
  std::vector<int> piv;
  const Matrix red = aug.rref(&piv);
  if (static_cast<int>(piv.size()) < rows_ || (rows_ > 0 && piv[static_cast<std::size_t>(rows_ - 1)] >= cols_)) {
    return std::nullopt;
  }
  Matrix inv(*field_, rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv(r, c) = red(r, cols_ + c);
  return inv;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  Matrix aug(*field_, rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[static_cast<std::size_t>(r)];
  }
  std::vector<int> piv;
  const Matrix red = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  Vec x(static_cast<std::size_t>(cols_), field_->zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[static_cast<std::size_t>(piv[i])] = red(static_cast<int>(i), cols_);
  return x;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out(static_cast<std::size_t>(rows_), field_->zero());
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::Internal, "matrix shape mismatch");
  Matrix m(*field_, rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Fq a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) m(r, c) += a * o(k, c);
    }
  return m;
}

std::vector<std::vector<std::uint32_t>> Matrix::encodings() const {
  std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)].push_back((*this)(r, c).value());
  return out;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  std::vector<int> piv;
  const Matrix red = m.rref(&piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v(static_cast<std::size_t>(m.cols()), m.field().zero());
    v[static_cast<std::size_t>(free)] = m.field().one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[static_cast<std::size_t>(piv[i])] = -red(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return echelon_span(basis, m.field(), m.cols());
}

std::vector<Vec> echelon_span(const std::vector<Vec>& vectors, const GaloisField& field, int dim) {
  if (vectors.empty()) return {};
  std::vector<int> piv;
  const Matrix red = Matrix(field, vectors, dim).rref(&piv);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(red.row(static_cast<int>(i)));
  return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::Internal, "stacking no matrices");
  int rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix m(blocks[0].field(), rows, blocks[0].cols());
  int r0 = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) m(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return m;
}

}  // namespace equicurve
