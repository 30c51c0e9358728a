#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "liefilt/rational.hpp"

namespace liefilt {

// Dense rational vector.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : data_(n) {}
  Vec(std::initializer_list<Rational> xs) : data_(xs) {}
  explicit Vec(std::vector<Rational> xs) : data_(std::move(xs)) {}

  std::size_t size() const { return data_.size(); }
  Rational& operator[](std::size_t i) { return data_[i]; }
  const Rational& operator[](std::size_t i) const { return data_[i]; }

  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& c);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& c, Vec a) { return a *= c; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.data_ == b.data_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

 private:
  std::vector<Rational> data_;
};

Rational dot(const Vec& a, const Vec& b);

// Dense rational matrix, row major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Mat transpose() const;
  Vec apply(const Vec& x) const;  // matrix * column vector
  Mat operator*(const Mat& o) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form; row space preserved.
Mat rref(Mat m);

// Pivot columns of an RREF matrix (ignores zero rows).
std::vector<std::size_t> pivot_columns(const Mat& rref_m);

std::size_t rank(const Mat& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

}  // namespace liefilt
