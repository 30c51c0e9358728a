#include "liefilt/subspace.hpp"

#include <algorithm>

namespace liefilt {

namespace {

// Drops zero rows of an RREF matrix.
Mat compact(const Mat& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec r = m.row(i);
    if (!r.is_zero()) rows.push_back(std::move(r));
  }
  return Mat::from_rows(rows, m.cols());
}

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("subspaces live in different ambient spaces");
}

}  // namespace

Subspace Subspace::span(const std::vector<Vec>& generators, std::size_t ambient_dim) {
  for (const Vec& g : generators)
    if (g.size() != ambient_dim) throw DimensionError("generator has wrong dimension");
  Subspace s(ambient_dim);
  s.basis_ = compact(rref(Mat::from_rows(generators, ambient_dim)));
  s.pivots_ = pivot_columns(s.basis_);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Mat::identity(ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) s.pivots_[j] = j;
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionError("vector has wrong dimension");
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    Rational c = v[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] -= c * basis_.at(i, j);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace kernel(const Mat& m) {
  const std::size_t n = m.cols();
  Mat r = rref(m);
  std::vector<std::size_t> pivots = pivot_columns(r);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(n);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, fc);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) gens.push_back(b.basis_vector(i));
  return Subspace::span(gens, a.ambient_dim());
}

Subspace annihilator(const Subspace& a) { return kernel(a.basis()); }

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis_vector(i))) return false;
  return true;
}

Subspace subspace_image(const Mat& l, const Subspace& a) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(l.apply(a.basis_vector(i)));
  return Subspace::span(gens, l.rows());
}

AffineSubspace::AffineSubspace(Vec point, Subspace direction)
    : point_(direction.reduce(std::move(point))), direction_(std::move(direction)) {}

AffineSubspace AffineSubspace::single_point(Vec point) {
  Subspace dir(point.size());
  return AffineSubspace(std::move(point), std::move(dir));
}

bool AffineSubspace::contains(const Vec& v) const { return direction_.contains(v - point_); }

bool affine_leq(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("affine subspaces live in different ambient spaces");
  return subspace_leq(a.direction(), b.direction()) && b.contains(a.point());
}

AffineSubspace affine_sum(const AffineSubspace& a, const AffineSubspace& b) {
  return AffineSubspace(a.point() + b.point(), subspace_sum(a.direction(), b.direction()));
}

AffineSubspace affine_image(const Mat& l, const AffineSubspace& a) {
  return AffineSubspace(l.apply(a.point()), subspace_image(l, a.direction()));
}

std::optional<AffineSubspace> affine_preimage(const Mat& l, const AffineSubspace& a) {
  // L x in a  iff  phi(L x) = phi(p) for every phi annihilating a's direction.
  Subspace ann = annihilator(a.direction());
  Mat c = ann.basis() * l;
  Vec d = ann.basis().apply(a.point());
  std::optional<Vec> x0 = solve(c, d);
  if (!x0) return std::nullopt;
  return AffineSubspace(*x0, kernel(c));
}

}  // namespace liefilt
