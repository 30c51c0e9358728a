#pragma once

#include "liefilt/algebra.hpp"

namespace fixtures {

using namespace liefilt;

// [x, y] = y
inline LieAlgebra axb() {
  return LieAlgebra::from_brackets({"x", "y"}, {{0, 1, Vec{0, 1}}});
}

inline Filtration axb_filtration() {
  Filtration s;
  s.ideals.push_back(Subspace::full(2));
  s.ideals.push_back(Subspace::span({Vec{0, 1}}, 2));
  s.ideals.push_back(Subspace(2));
  return s;
}

// [x, y] = z
inline LieAlgebra heisenberg() {
  return LieAlgebra::from_brackets({"x", "y", "z"}, {{0, 1, Vec{0, 0, 1}}});
}

inline Filtration heisenberg_filtration() {
  Filtration s;
  s.ideals.push_back(Subspace::full(3));
  s.ideals.push_back(Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3));
  s.ideals.push_back(Subspace::span({Vec{0, 0, 1}}, 3));
  s.ideals.push_back(Subspace(3));
  return s;
}

// [t, x] = x, [t, y] = y
inline LieAlgebra diagonal3() {
  return LieAlgebra::from_brackets({"t", "x", "y"},
                                   {{0, 1, Vec{0, 1, 0}}, {0, 2, Vec{0, 0, 1}}});
}

inline LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
  return LieAlgebra::from_brackets(names, {});
}

inline Filtration flag_filtration(const LieAlgebra& g) {
  Filtration s;
  for (std::size_t drop = 0; drop <= g.dim(); ++drop) {
    std::vector<Vec> gens;
    for (std::size_t a = drop; a < g.dim(); ++a) gens.push_back(g.basis_vector(a));
    s.ideals.push_back(Subspace::span(gens, g.dim()));
  }
  return s;
}

}  // namespace fixtures
