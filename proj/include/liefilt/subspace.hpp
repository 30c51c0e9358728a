#pragma once

#include <optional>
#include <vector>

#include "liefilt/linalg.hpp"

namespace liefilt {

// Linear subspace in canonical form: basis rows in RREF, no zero rows.
// Two subspaces are equal as sets iff the representations are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace span(const std::vector<Vec>& generators, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  // Coordinates of v over the RREF basis; nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  // Residue of v modulo this subspace (pivot coordinates eliminated).
  Vec reduce(Vec v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Mat& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_leq(const Subspace& a, const Subspace& b);
// {phi : phi(v) = 0 for all v in a}, in dual coordinates.
Subspace annihilator(const Subspace& a);
// Row span of image vectors L * v, v over a's basis.
Subspace subspace_image(const Mat& l, const Subspace& a);

// Affine subspace: base point plus direction space. The stored point is the
// unique representative vanishing on the direction's pivot coordinates, so
// equality of sets is structural equality.
class AffineSubspace {
 public:
  AffineSubspace(Vec point, Subspace direction);
  static AffineSubspace single_point(Vec point);

  std::size_t ambient_dim() const { return direction_.ambient_dim(); }
  std::size_t dim() const { return direction_.dim(); }
  const Vec& point() const { return point_; }
  const Subspace& direction() const { return direction_; }

  bool contains(const Vec& v) const;

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.point_ == b.point_ && a.direction_ == b.direction_;
  }
  friend bool operator!=(const AffineSubspace& a, const AffineSubspace& b) { return !(a == b); }

 private:
  Vec point_;
  Subspace direction_;
};

bool affine_leq(const AffineSubspace& a, const AffineSubspace& b);
// {x + y : x in a, y in b}
AffineSubspace affine_sum(const AffineSubspace& a, const AffineSubspace& b);
AffineSubspace affine_image(const Mat& l, const AffineSubspace& a);
// {x : L x in a}; empty preimage is a distinguished return, not an error.
std::optional<AffineSubspace> affine_preimage(const Mat& l, const AffineSubspace& a);

}  // namespace liefilt
