#include "doctest.h"
#include "fixtures.hpp"
#include "liefilt/rclass.hpp"

using namespace liefilt;
using namespace fixtures;

TEST_CASE("equivalence classes of the worked examples") {
  LieAlgebra ab = axb();
  Filtration s = axb_filtration();

  RClass one = r_class(ab, s, Vec{0, 1});
  CHECK(one.set == AffineSubspace(Vec{0, 1}, Subspace::span({Vec{1, 0}}, 2)));
  CHECK(one.set.dim() == 1);

  // Characters have singleton classes.
  RClass pt = r_class(ab, s, Vec{3, 0});
  CHECK(pt.set == AffineSubspace::single_point(Vec{3, 0}));

  LieAlgebra h3 = heisenberg();
  Filtration hs = heisenberg_filtration();
  RClass hclass = r_class(h3, hs, Vec{0, Rational(2), Rational(-1, 2)});
  CHECK(hclass.set ==
        AffineSubspace(Vec{0, 2, Rational(-1, 2)}, Subspace::span({Vec{1, 0, 0}}, 3)));
  CHECK(hclass.set.dim() + hclass.pol.space.dim() == 3);
}

TEST_CASE("module equivalence matches the class description") {
  LieAlgebra ab = axb();
  Filtration s = axb_filtration();
  CHECK(modules_equivalent(ab, s, Vec{0, 1}, Vec{7, 1}));
  CHECK(modules_equivalent(ab, s, Vec{0, 1}, Vec{0, 1}));
  CHECK(!modules_equivalent(ab, s, Vec{0, 1}, Vec{0, 2}));

  LieAlgebra h3 = heisenberg();
  Filtration hs = heisenberg_filtration();
  CHECK(!modules_equivalent(h3, hs, Vec{0, 0, 1}, Vec{0, 1, 1}));
  CHECK(modules_equivalent(h3, hs, Vec{0, 0, 1}, Vec{9, 0, 1}));
}

TEST_CASE("sampling stays inside the class") {
  LieAlgebra h3 = heisenberg();
  Filtration hs = heisenberg_filtration();
  RClass rc = r_class(h3, hs, Vec{0, 0, 1});
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    Vec member = sample_affine(rc.set, rng);
    CHECK(rc.set.contains(member));
    CHECK(modules_equivalent(h3, hs, Vec{0, 0, 1}, member));
  }
}

TEST_CASE("spectrum of an induced representation") {
  LieAlgebra ab = axb();
  Filtration s = axb_filtration();
  Subalgebra ky(ab, Subspace::span({Vec{0, 1}}, 2));

  AffineSubspace space = spec_induced_space(ab, s, ky, Vec{1});
  CHECK(space == AffineSubspace(Vec{0, 1}, Subspace::span({Vec{1, 0}}, 2)));

  CHECK(spec_induced_member(ab, s, ky, Vec{1}, Vec{0, 1}));
  CHECK(spec_induced_member_affine(ab, s, ky, Vec{1}, Vec{0, 1}));
  CHECK(!spec_induced_member(ab, s, ky, Vec{1}, Vec{0, 2}));
  CHECK(!spec_induced_member_affine(ab, s, ky, Vec{1}, Vec{0, 2}));

  // Inducing from the whole algebra is membership of f itself.
  Subalgebra full(ab, Subspace::full(2));
  Vec f{0, 1};
  CHECK(spec_induced_member(ab, s, full, f, f));
}

TEST_CASE("spectrum of a restriction") {
  LieAlgebra ab = axb();
  Filtration s = axb_filtration();
  Subalgebra ky(ab, Subspace::span({Vec{0, 1}}, 2));

  AffineSubspace space = spec_restrict_space(ab, s, Vec{0, 1}, ky);
  CHECK(space == AffineSubspace::single_point(Vec{1}));
  CHECK(spec_restrict_member(ab, s, Vec{0, 1}, ky, Vec{1}));
  CHECK(spec_restrict_member_affine(ab, s, Vec{0, 1}, ky, Vec{1}));
  CHECK(!spec_restrict_member(ab, s, Vec{0, 1}, ky, Vec{0}));
  CHECK(!spec_restrict_member_affine(ab, s, Vec{0, 1}, ky, Vec{0}));

  // pv(f) meets span{x} trivially, so every character of it appears.
  LieAlgebra h3 = heisenberg();
  Filtration hs = heisenberg_filtration();
  Subalgebra kx(h3, Subspace::span({Vec{1, 0, 0}}, 3));
  AffineSubspace all = spec_restrict_space(h3, hs, Vec{0, 0, 1}, kx);
  CHECK(all.dim() == 1);
  CHECK(spec_restrict_member(h3, hs, Vec{0, 0, 1}, kx, Vec{42}));

  // Restriction to the whole algebra degenerates to equivalence.
  Subalgebra full(ab, Subspace::full(2));
  CHECK(spec_restrict_member(ab, s, Vec{0, 1}, full, Vec{5, 1}) ==
        modules_equivalent(ab, s, Vec{0, 1}, Vec{5, 1}));
  CHECK(spec_restrict_member(ab, s, Vec{0, 1}, full, Vec{5, 2}) ==
        modules_equivalent(ab, s, Vec{0, 1}, Vec{5, 2}));
}

TEST_CASE("spectrum of a tensor product") {
  LieAlgebra h3 = heisenberg();
  Filtration hs = heisenberg_filtration();
  AffineSubspace space = spec_tensor_space(h3, hs, Vec{0, 0, 1}, Vec{0, 0, -1});
  CHECK(space == AffineSubspace(Vec{0, 0, 0}, Subspace::span({Vec{1, 0, 0}}, 3)));
  CHECK(spec_tensor_member(h3, hs, Vec{0, 0, 1}, Vec{0, 0, -1}, Vec{5, 0, 0}));
  CHECK(spec_tensor_member(h3, hs, Vec{0, 0, 1}, Vec{0, 0, -1}, Vec{Rational(-7, 3), 0, 0}));
  CHECK(!spec_tensor_member(h3, hs, Vec{0, 0, 1}, Vec{0, 0, -1}, Vec{0, 0, 1}));

  LieAlgebra ab = axb();
  Filtration s = axb_filtration();
  AffineSubspace doubled = spec_tensor_space(ab, s, Vec{0, 1}, Vec{0, 1});
  CHECK(doubled == AffineSubspace(Vec{0, 2}, Subspace::span({Vec{1, 0}}, 2)));

  // Tensoring with a character translates the class.
  AffineSubspace translated = spec_tensor_space(ab, s, Vec{0, 1}, Vec{3, 0});
  CHECK(translated == AffineSubspace(Vec{3, 1}, Subspace::span({Vec{1, 0}}, 2)));
  CHECK(spec_tensor_member(ab, s, Vec{0, 1}, Vec{3, 0}, Vec{0, 1}));
}

TEST_CASE("product classes factor blockwise") {
  LieAlgebra ab = axb();
  Filtration s = axb_filtration();
  CHECK(product_class_check(ab, s, Vec{0, 1}, Vec{0, 1}));
  CHECK(product_class_check(ab, s, Vec{0, 0}, Vec{0, 0}));

  LieAlgebra h3 = heisenberg();
  Filtration hs = heisenberg_filtration();
  CHECK(product_class_check(h3, hs, Vec{0, 0, 1}, Vec{0, 0, -1}));

  // The product polarization is span{(y,0),(0,y)} for the ax+b pair.
  ProductAlgebra prod = product_algebra(ab, s);
  Polarization pp = vergne_polarization(prod.algebra, prod.filtration,
                                        prod.pair_functional(Vec{0, 1}, Vec{0, 1}));
  CHECK(pp.space == Subspace::span({Vec{0, 1, 0, 0}, Vec{0, 0, 0, 1}}, 4));
}

TEST_CASE("twisted characters are constant on classes") {
  LieAlgebra ab = axb();
  Filtration s = axb_filtration();
  CHECK(dixmier_constancy_check(ab, s, Vec{0, 1}, 20, 42));
  CHECK(dixmier_constancy_check(ab, s, Vec{2, 0}, 20, 42));

  LieAlgebra h3 = heisenberg();
  CHECK(dixmier_constancy_check(h3, heisenberg_filtration(), Vec{0, 0, 1}, 20, 42));
}
