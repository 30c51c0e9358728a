#include "liefilt/linalg.hpp"

#include <algorithm>

namespace liefilt {

bool Vec::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Vec& Vec::operator+=(const Vec& o) {
  if (size() != o.size()) throw DimensionError("vector size mismatch in +");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (size() != o.size()) throw DimensionError("vector size mismatch in -");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch in dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length mismatch in from_rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionError("matrix/vector size mismatch in apply");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix size mismatch in *");
  Mat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& c = at(i, k);
      if (c == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += c * o.at(k, j);
    }
  return p;
}

Mat rref(Mat m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    std::size_t i = r;
    while (i < rows && m.at(i, lead) == 0) ++i;
    if (i == rows) {
      ++lead;
      --r;
      continue;
    }
    if (i != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(i, j), m.at(r, j));
    Rational piv = m.at(r, lead);
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) /= piv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r) continue;
      Rational f = m.at(k, lead);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m.at(k, j) -= f * m.at(r, j);
    }
    ++lead;
  }
  return m;
}

std::vector<std::size_t> pivot_columns(const Mat& rref_m) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rref_m.rows(); ++i) {
    std::size_t j = 0;
    while (j < rref_m.cols() && rref_m.at(i, j) == 0) ++j;
    if (j < rref_m.cols()) pivots.push_back(j);
  }
  return pivots;
}

std::size_t rank(const Mat& m) { return pivot_columns(rref(m)).size(); }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  aug = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (aug.at(i, j) != (i == j ? Rational(1) : Rational(0))) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionError("rhs size mismatch in solve");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  aug = rref(aug);
  Vec x(a.cols());
  for (std::size_t i = 0; i < aug.rows(); ++i) {
    std::size_t j = 0;
    while (j < aug.cols() && aug.at(i, j) == 0) ++j;
    if (j == aug.cols()) continue;
    if (j == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[j] = aug.at(i, a.cols());
  }
  return x;
}

}  // namespace liefilt
