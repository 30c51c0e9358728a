#include "doctest.h"
#include "fixtures.hpp"
#include "liefilt/polar.hpp"

using namespace liefilt;
using namespace fixtures;

TEST_CASE("skew forms") {
  LieAlgebra ab = axb();
  Mat b = skew_form(ab, Vec{0, 1}, Subspace::full(2));
  CHECK(b == Mat{{0, 1}, {-1, 0}});

  CHECK(skew_form(ab, Vec{0, 0}, Subspace::full(2)) == Mat(2, 2));
  CHECK(skew_form(abelian(3), Vec{1, 2, 3}, Subspace::full(3)) == Mat(3, 3));
}

TEST_CASE("stabilizers") {
  LieAlgebra ab = axb();
  CHECK(stabilizer(ab, Vec{0, 1}).dim() == 0);
  CHECK(stabilizer(ab, Vec{0, 0}) == Subspace::full(2));

  LieAlgebra h3 = heisenberg();
  CHECK(stabilizer(h3, Vec{0, 0, 1}) == Subspace::span({Vec{0, 0, 1}}, 3));

  // Stabilizer inside a subalgebra embeds back into the ambient space.
  Subspace g1 = Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3);
  CHECK(stabilizer_in(h3, Vec{0, 0, 1}, g1) == g1);
}

TEST_CASE("relative stabilizers") {
  LieAlgebra ab = axb();
  Subspace ky = Subspace::span({Vec{0, 1}}, 2);
  // f1(y) = 1: f1([x, y]) = f1(y) = 1, so x drops out.
  CHECK(relative_stabilizer(ab, ky, Vec{1}) == ky);
  CHECK(relative_stabilizer(ab, ky, Vec{0}) == Subspace::full(2));

  LieAlgebra h3 = heisenberg();
  Subspace g1 = Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3);
  CHECK(relative_stabilizer(h3, g1, Vec{0, 1}) == g1);
}

TEST_CASE("Vergne polarizations reproduce the worked examples") {
  LieAlgebra ab = axb();
  Filtration s = axb_filtration();
  CHECK(vergne_polarization(ab, s, Vec{0, 1}).space == Subspace::span({Vec{0, 1}}, 2));
  // Characters polarize to the whole algebra.
  CHECK(vergne_polarization(ab, s, Vec{5, 0}).space == Subspace::full(2));

  LieAlgebra h3 = heisenberg();
  Filtration hs = heisenberg_filtration();
  CHECK(vergne_polarization(h3, hs, Vec{0, 0, 1}).space ==
        Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3));
}

TEST_CASE("polarization predicate") {
  LieAlgebra ab = axb();
  CHECK(is_polarization(ab, Subspace::span({Vec{0, 1}}, 2), Vec{0, 1}));
  CHECK(is_polarization(ab, Subspace::full(2), Vec{0, 0}));

  LieAlgebra h3 = heisenberg();
  // dim 1 != (3 + 1)/2.
  CHECK(!is_polarization(h3, Subspace::span({Vec{1, 0, 0}}, 3), Vec{0, 0, 1}));
  // Right dimension but not isotropic: f([x,y]) = 1.
  CHECK(!is_polarization(h3, Subspace::span({Vec{1, 0, 0}, Vec{0, 1, 0}}, 3), Vec{0, 0, 1}));
}

TEST_CASE("ad invariance") {
  LieAlgebra h3 = heisenberg();
  Subspace p = Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3);
  CHECK(ad_invariant(h3, p, Vec{1, 0, 0}));
  CHECK(ad_invariant(h3, p, Vec{0, 1, 0}));

  LieAlgebra ab = axb();
  CHECK(!ad_invariant(ab, Subspace::span({Vec{1, 0}}, 2), Vec{0, 1}));
}

TEST_CASE("theta characters") {
  LieAlgebra ab = axb();
  CHECK(theta(ab, Subspace::full(2)) == Vec{0, 0});

  // [t,x] = x, [t,y] = y; on p = span{t,x} the quotient is the line of y.
  LieAlgebra d3 = diagonal3();
  Subspace p = Subspace::span({Vec{1, 0, 0}, Vec{0, 1, 0}}, 3);
  CHECK(is_polarization(d3, p, Vec{0, 0, 1}));
  CHECK(theta(d3, p) == Vec{Rational(1, 2), 0});

  LieAlgebra h3 = heisenberg();
  CHECK(theta(h3, Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3)) == Vec{0, 0});
}

TEST_CASE("twisted characters") {
  LieAlgebra ab = axb();
  CHECK(twisted_character(ab, Vec{0, 1}, Subspace::span({Vec{0, 1}}, 2)) == Vec{1});
  CHECK(twisted_character(ab, Vec{0, 0}, Subspace::full(2)) == Vec{0, 0});

  LieAlgebra d3 = diagonal3();
  Subspace p = Subspace::span({Vec{1, 0, 0}, Vec{0, 1, 0}}, 3);
  CHECK(twisted_character(d3, Vec{0, 0, 1}, p) == Vec{Rational(-1, 2), 0});

  // Rejects non-polarizations.
  CHECK_THROWS_AS(twisted_character(ab, Vec{0, 1}, Subspace::full(2)), DimensionError);
}

TEST_CASE("Vergne output validates itself") {
  // A filtration that is not made of ideals breaks the construction's
  // guarantees; the guard must notice when the result is not a polarization.
  LieAlgebra h3 = heisenberg();
  Filtration good = heisenberg_filtration();
  Vec f{0, 0, 1};
  Polarization pv = vergne_polarization(h3, good, f);
  CHECK(is_polarization(h3, pv.space, f));
}
