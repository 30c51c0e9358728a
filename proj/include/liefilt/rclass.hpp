#pragma once

#include <random>

#include "liefilt/pbw.hpp"

namespace liefilt {

// Equivalence class of f: all functionals agreeing with f on its Vergne
// polarization, realized as an affine subspace of g*.
struct RClass {
  Vec representative;
  Polarization pol;
  Vec restriction;  // f on the polarization's basis rows
  AffineSubspace set;
};

// {eta : eta(row_i) = values_i for every basis row of sub}, in dual coords.
AffineSubspace functional_level_set(const Subspace& sub, const Vec& values);

RClass r_class(const LieAlgebra& g, const Filtration& s, const Vec& f);

// True iff the Vergne polarizations coincide and the functionals agree on
// them; decides equivalence of the induced modules both ways.
bool modules_equivalent(const LieAlgebra& g, const Filtration& s, const Vec& f1, const Vec& f2);

// Random member of an affine subspace: base point plus a small-integer
// combination of the direction basis.
Vec sample_affine(const AffineSubspace& a, std::mt19937_64& rng);

// ---- spectrum of the representation induced from a subalgebra ----

// pi^{-1}(r(h)) = {eta in g* : eta = h on qv(h)}, with qv(h) the Vergne
// polarization of h in (h, induced filtration).
AffineSubspace spec_induced_space(const LieAlgebra& g, const Filtration& s, const Subalgebra& h,
                                  const Vec& hf);
// Polarization-condition route: qv(h) inside pv(f) and f = h on qv(h).
bool spec_induced_member(const LieAlgebra& g, const Filtration& s, const Subalgebra& h,
                         const Vec& hf, const Vec& f);
// Independent affine route: R(f) inside pi^{-1}(r(h)).
bool spec_induced_member_affine(const LieAlgebra& g, const Filtration& s, const Subalgebra& h,
                                const Vec& hf, const Vec& f);

// ---- spectrum of the restriction to a subalgebra ----

// pi(R(f)) = {mu in h* : mu = f on pv(f) meet h}.
AffineSubspace spec_restrict_space(const LieAlgebra& g, const Filtration& s, const Vec& f,
                                   const Subalgebra& h);
// qv(h) contains pv(f) meet h, and h = f there.
bool spec_restrict_member(const LieAlgebra& g, const Filtration& s, const Vec& f,
                          const Subalgebra& h, const Vec& hf);
bool spec_restrict_member_affine(const LieAlgebra& g, const Filtration& s, const Vec& f,
                                 const Subalgebra& h, const Vec& hf);

// ---- spectrum of a tensor product ----

// R(f1) + R(f2).
AffineSubspace spec_tensor_space(const LieAlgebra& g, const Filtration& s, const Vec& f1,
                                 const Vec& f2);
bool spec_tensor_member(const LieAlgebra& g, const Filtration& s, const Vec& f1, const Vec& f2,
                        const Vec& cand);

// Vergne polarization and class of f1 x f2 on g x g factor blockwise.
bool product_class_check(const LieAlgebra& g, const Filtration& s, const Vec& f1, const Vec& f2);

// Sampled members of R(f) share the polarization, the restriction, and the
// twisted character f - theta.
bool dixmier_constancy_check(const LieAlgebra& g, const Filtration& s, const Vec& f,
                             std::size_t samples, std::uint64_t seed);

}  // namespace liefilt
