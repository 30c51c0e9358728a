#include "doctest.h"
#include "liefilt/rclass.hpp"
#include "liefilt/subspace.hpp"

using namespace liefilt;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("rref canonical forms") {
  Mat id = Mat::identity(3);
  CHECK(rref(id) == id);

  // Hand Gaussian elimination: second row is half the first.
  Mat m{{2, 4}, {1, 2}};
  Mat expect{{1, 2}, {0, 0}};
  CHECK(rref(m) == expect);

  Mat zero(2, 3);
  CHECK(rref(zero) == zero);

  Mat mixed{{0, 2, 1}, {0, 4, 2}, {1, 1, 1}};
  Mat r = rref(mixed);
  CHECK(rref(r) == r);
  CHECK(rank(mixed) == 2);
}

TEST_CASE("kernel computations") {
  CHECK(kernel(Mat::identity(2)).dim() == 0);

  Subspace k = kernel(Mat{{0, 1}, {0, 0}});
  CHECK(k == Subspace::span({Vec{1, 0}}, 2));

  CHECK(kernel(Mat(3, 3)) == Subspace::full(3));

  Mat m{{1, 2, 3}, {0, 1, 1}};
  Subspace ker = kernel(m);
  CHECK(ker.dim() + rank(m) == m.cols());
  for (std::size_t i = 0; i < ker.dim(); ++i)
    CHECK(m.apply(ker.basis_vector(i)).is_zero());
}

TEST_CASE("solve and inverse") {
  Mat a{{1, 1}, {0, 2}};
  auto x = solve(a, Vec{3, 4});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == Vec{3, 4});
  CHECK(inverse(a).has_value());
  CHECK((*inverse(a)) * a == Mat::identity(2));

  Mat sing{{1, 1}, {2, 2}};
  CHECK(!inverse(sing).has_value());
  CHECK(!solve(sing, Vec{0, 1}).has_value());
}

TEST_CASE("subspace set operations") {
  Subspace e1 = Subspace::span({Vec{1, 0, 0}}, 3);
  Subspace e2 = Subspace::span({Vec{0, 1, 0}}, 3);
  CHECK(subspace_sum(e1, e2) == Subspace::span({Vec{1, 0, 0}, Vec{0, 1, 0}}, 3));

  // Coordinate duality in Q^2.
  CHECK(annihilator(Subspace::span({Vec{0, 1}}, 2)) == Subspace::span({Vec{1, 0}}, 2));

  Subspace a = Subspace::span({Vec{1, 1, 0}, Vec{0, 0, 1}}, 3);
  Subspace b = Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3);
  CHECK(subspace_intersect(a, b) == Subspace::span({Vec{0, 0, 1}}, 3));

  CHECK(subspace_leq(subspace_intersect(a, b), a));
  CHECK(!subspace_leq(a, b));
  CHECK(annihilator(annihilator(a)) == a);
  CHECK(a.dim() + annihilator(a).dim() == 3);
  CHECK_THROWS_AS(subspace_sum(e1, Subspace::full(2)), DimensionError);
}

TEST_CASE("subspace coordinates against RREF basis") {
  Subspace s = Subspace::span({Vec{1, 0, 2}, Vec{0, 1, -1}}, 3);
  Vec v = Rational(3) * s.basis_vector(0) - Rational(1, 2) * s.basis_vector(1);
  auto c = s.coordinates(v);
  REQUIRE(c.has_value());
  CHECK(*c == Vec{3, Rational(-1, 2)});
  CHECK(!s.coordinates(Vec{0, 0, 1}).has_value());
}

TEST_CASE("affine subspaces canonicalize and compare") {
  // {(t, 1) : t} inside the full plane.
  AffineSubspace line(Vec{7, 1}, Subspace::span({Vec{1, 0}}, 2));
  CHECK(line.point() == Vec{0, 1});  // reduced modulo the direction
  AffineSubspace plane(Vec{0, 0}, Subspace::full(2));
  CHECK(affine_leq(line, line));
  CHECK(affine_leq(line, plane));
  CHECK(!affine_leq(plane, line));

  // Sum of {g(y)=0, g(z)=1} and {g(y)=0, g(z)=-1} in the dual of Q^3.
  AffineSubspace pos(Vec{0, 0, 1}, Subspace::span({Vec{1, 0, 0}}, 3));
  AffineSubspace neg(Vec{0, 0, -1}, Subspace::span({Vec{1, 0, 0}}, 3));
  AffineSubspace want(Vec{0, 0, 0}, Subspace::span({Vec{1, 0, 0}}, 3));
  CHECK(affine_sum(pos, neg) == want);
}

TEST_CASE("affine image and preimage") {
  Mat l{{1, 1}, {0, 1}};
  AffineSubspace a(Vec{1, 2}, Subspace::span({Vec{1, 0}}, 2));
  AffineSubspace img = affine_image(l, a);
  CHECK(img.contains(l.apply(Vec{1, 2})));
  CHECK(img.contains(l.apply(Vec{5, 2})));

  auto pre = affine_preimage(l, img);
  REQUIRE(pre.has_value());
  CHECK(affine_leq(a, *pre));

  // A line in Q^2 missing the target point has an empty preimage.
  Mat embed{{1}, {0}};
  AffineSubspace off = AffineSubspace::single_point(Vec{0, 1});
  CHECK(!affine_preimage(embed, off).has_value());
}

TEST_CASE("level sets of functionals") {
  Subspace span_y = Subspace::span({Vec{0, 1}}, 2);
  AffineSubspace set = functional_level_set(span_y, Vec{1});
  CHECK(set.point() == Vec{0, 1});
  CHECK(set.direction() == Subspace::span({Vec{1, 0}}, 2));
  CHECK(set.contains(Vec{5, 1}));
  CHECK(!set.contains(Vec{5, 2}));
}
