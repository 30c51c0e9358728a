#pragma once

#include <string>
#include <vector>

#include "liefilt/subspace.hpp"

namespace liefilt {

// Collects every violated axiom instead of failing fast; an empty report
// means the object is valid.
struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
};

// Finite-dimensional Lie algebra given by structure constants over Q.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> names, std::vector<std::vector<Vec>> table);

  // Fills [e_i,e_j] = value and [e_j,e_i] = -value, everything else zero.
  static LieAlgebra from_brackets(
      std::vector<std::string> names,
      const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& brackets);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Vec& table(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Vec basis_vector(std::size_t i) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Subspace bracket_span(const Subspace& a, const Subspace& b) const;

  // Derived series g >= [g,g] >= ... until it stabilizes.
  std::vector<Subspace> derived_series() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> table_;
};

ValidationReport validate_algebra(const LieAlgebra& a);

// Chain of ideals g = g_0 >= g_1 >= ... >= g_k = 0 with codimension steps
// 0 or 1; repeated members are allowed and preserved.
struct Filtration {
  std::vector<Subspace> ideals;

  std::size_t length() const { return ideals.empty() ? 0 : ideals.size() - 1; }
  const Subspace& at(std::size_t i) const { return ideals[i]; }
  // Index of the first member with codimension one (skips leading repeats).
  std::optional<std::size_t> first_proper() const;
  // Tail filtration on the member at index i, in that member's coordinates.
  Filtration restricted_to(std::size_t i) const;
};

ValidationReport validate_filtration(const LieAlgebra& a, const Filtration& s);

// Equality up to multiplicity of repeated members.
bool filtrations_equal(const Filtration& a, const Filtration& b);

// Subalgebra with its own canonical ordered basis (the RREF rows of its
// space), so functionals on it have canonical coordinates.
class Subalgebra {
 public:
  Subalgebra(const LieAlgebra& parent, Subspace space);

  const Subspace& space() const { return space_; }
  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return space_.dim(); }

  // Restriction map pi: g* -> h*, values of f on the basis rows.
  Vec restrict_functional(const Vec& f) const;
  Mat restriction_matrix() const { return space_.basis(); }
  // h coordinates -> ambient coordinates.
  Vec embed(const Vec& v) const;
  Subspace embed_subspace(const Subspace& s) const;
  // (s intersect h) written in h coordinates.
  Subspace meet_in_sub(const Subspace& s) const;

 private:
  Subspace space_;
  LieAlgebra algebra_;
};

Filtration induced_filtration(const Subalgebra& h, const Filtration& s);

// Homomorphism of Lie algebras with filtrations: L[x,y] = [Lx,Ly] and
// L(source_i) inside target_i for every i.
struct FilteredHom {
  Mat matrix;
};

ValidationReport validate_homomorphism(const LieAlgebra& src, const Filtration& src_s,
                                       const LieAlgebra& dst, const Filtration& dst_s,
                                       const FilteredHom& phi);

struct ProductAlgebra {
  LieAlgebra algebra;
  Filtration filtration;  // interleaved chain g_i x g_i > g_i x g_{i+1} > ...

  Vec left(const Vec& x) const;   // x -> (x, 0)
  Vec right(const Vec& x) const;  // x -> (0, x)
  Vec pair_functional(const Vec& f1, const Vec& f2) const;
  Subspace pair_subspace(const Subspace& a, const Subspace& b) const;
};

ProductAlgebra product_algebra(const LieAlgebra& a, const Filtration& s);

// x -> (x, x), together with the filtration s x s induces on the source
// (s with every proper member doubled).
struct DiagonalEmbedding {
  FilteredHom hom;
  Filtration source_filtration;
};

DiagonalEmbedding diagonal_embedding(const LieAlgebra& a, const Filtration& s);

}  // namespace liefilt
