#pragma once

#include <random>
#include <string>

#include "liefilt/algebra.hpp"

namespace liefilt {

struct RandomSpec {
  std::uint64_t seed = 0;
  std::size_t min_dim = 1;
  std::size_t max_dim = 6;  // capped at 8
  enum Family { UpperTriangular, Extension, Mixed } family = Mixed;
};

struct Instance {
  LieAlgebra algebra{{}, {}};
  Filtration filtration;
  std::string label;
};

// Family A: strictly upper-triangular matrix algebras with the filtration
// that peels generators off level by level. Family B: iterated
// one-dimensional extensions by flag-preserving derivations. Output always
// passes validate_algebra and validate_filtration.
Instance generate_random(const RandomSpec& spec);

// Coordinates with small numerators, denominator 1 or 2.
Vec random_functional(std::size_t dim, std::mt19937_64& rng);

// A bracket-closed subspace: a filtration member, the whole algebra, or the
// closure of one or two random vectors.
Subspace random_subalgebra(const LieAlgebra& g, const Filtration& s, std::mt19937_64& rng);

}  // namespace liefilt
