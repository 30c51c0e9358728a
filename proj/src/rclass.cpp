#include "liefilt/rclass.hpp"

namespace liefilt {

AffineSubspace functional_level_set(const Subspace& sub, const Vec& values) {
  if (values.size() != sub.dim()) throw DimensionError("one value per basis row required");
  Vec point(sub.ambient_dim());
  for (std::size_t i = 0; i < sub.dim(); ++i) point[sub.pivots()[i]] = values[i];
  return AffineSubspace(std::move(point), annihilator(sub));
}

RClass r_class(const LieAlgebra& g, const Filtration& s, const Vec& f) {
  Polarization pol = vergne_polarization(g, s, f);
  Vec restriction = pol.space.basis().apply(f);
  AffineSubspace set = functional_level_set(pol.space, restriction);
  return RClass{f, std::move(pol), std::move(restriction), std::move(set)};
}

bool modules_equivalent(const LieAlgebra& g, const Filtration& s, const Vec& f1, const Vec& f2) {
  Polarization p1 = vergne_polarization(g, s, f1);
  Polarization p2 = vergne_polarization(g, s, f2);
  if (!(p1.space == p2.space)) return false;
  return p1.space.basis().apply(f1) == p2.space.basis().apply(f2);
}

Vec sample_affine(const AffineSubspace& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Vec v = a.point();
  for (std::size_t i = 0; i < a.direction().dim(); ++i) {
    int c = coeff(rng);
    if (c != 0) v += Rational(c) * a.direction().basis_vector(i);
  }
  return v;
}

namespace {

// Vergne polarization of hf inside (h, induced filtration), embedded in g.
Subspace qv_ambient(const Filtration& s, const Subalgebra& h, const Vec& hf) {
  Filtration hs = induced_filtration(h, s);
  Polarization qv = vergne_polarization(h.algebra(), hs, hf);
  return h.embed_subspace(qv.space);
}

}  // namespace

AffineSubspace spec_induced_space(const LieAlgebra& g, const Filtration& s, const Subalgebra& h,
                                  const Vec& hf) {
  Subspace qv = qv_ambient(s, h, hf);
  // hf evaluated against the embedded rows, through h's coordinates.
  Vec values(qv.dim());
  for (std::size_t i = 0; i < qv.dim(); ++i) {
    auto c = h.space().coordinates(qv.basis_vector(i));
    if (!c) throw InternalError("qv escapes the subalgebra");
    values[i] = dot(hf, *c);
  }
  return functional_level_set(qv, values);
}

bool spec_induced_member(const LieAlgebra& g, const Filtration& s, const Subalgebra& h,
                         const Vec& hf, const Vec& f) {
  Subspace qv = qv_ambient(s, h, hf);
  Polarization pv = vergne_polarization(g, s, f);
  if (!subspace_leq(qv, pv.space)) return false;
  for (std::size_t i = 0; i < qv.dim(); ++i) {
    auto c = h.space().coordinates(qv.basis_vector(i));
    if (!c) throw InternalError("qv escapes the subalgebra");
    if (dot(f, qv.basis_vector(i)) != dot(hf, *c)) return false;
  }
  return true;
}

bool spec_induced_member_affine(const LieAlgebra& g, const Filtration& s, const Subalgebra& h,
                                const Vec& hf, const Vec& f) {
  return affine_leq(r_class(g, s, f).set, spec_induced_space(g, s, h, hf));
}

AffineSubspace spec_restrict_space(const LieAlgebra& g, const Filtration& s, const Vec& f,
                                   const Subalgebra& h) {
  Polarization pv = vergne_polarization(g, s, f);
  Subspace meet = h.meet_in_sub(pv.space);
  Vec values(meet.dim());
  for (std::size_t i = 0; i < meet.dim(); ++i)
    values[i] = dot(f, h.embed(meet.basis_vector(i)));
  return functional_level_set(meet, values);
}

bool spec_restrict_member(const LieAlgebra& g, const Filtration& s, const Vec& f,
                          const Subalgebra& h, const Vec& hf) {
  Polarization pv = vergne_polarization(g, s, f);
  Subspace meet = h.meet_in_sub(pv.space);
  Filtration hs = induced_filtration(h, s);
  Polarization qv = vergne_polarization(h.algebra(), hs, hf);
  if (!subspace_leq(meet, qv.space)) return false;
  for (std::size_t i = 0; i < meet.dim(); ++i)
    if (dot(hf, meet.basis_vector(i)) != dot(f, h.embed(meet.basis_vector(i)))) return false;
  return true;
}

bool spec_restrict_member_affine(const LieAlgebra& g, const Filtration& s, const Vec& f,
                                 const Subalgebra& h, const Vec& hf) {
  Filtration hs = induced_filtration(h, s);
  return affine_leq(r_class(h.algebra(), hs, hf).set, spec_restrict_space(g, s, f, h));
}

AffineSubspace spec_tensor_space(const LieAlgebra& g, const Filtration& s, const Vec& f1,
                                 const Vec& f2) {
  return affine_sum(r_class(g, s, f1).set, r_class(g, s, f2).set);
}

bool spec_tensor_member(const LieAlgebra& g, const Filtration& s, const Vec& f1, const Vec& f2,
                        const Vec& cand) {
  return affine_leq(r_class(g, s, cand).set, spec_tensor_space(g, s, f1, f2));
}

bool product_class_check(const LieAlgebra& g, const Filtration& s, const Vec& f1, const Vec& f2) {
  ProductAlgebra prod = product_algebra(g, s);
  Vec pair = prod.pair_functional(f1, f2);
  Polarization pv_pair = vergne_polarization(prod.algebra, prod.filtration, pair);
  Polarization p1 = vergne_polarization(g, s, f1);
  Polarization p2 = vergne_polarization(g, s, f2);
  if (!(pv_pair.space == prod.pair_subspace(p1.space, p2.space))) return false;
  RClass rc_pair = r_class(prod.algebra, prod.filtration, pair);
  RClass rc1 = r_class(g, s, f1);
  RClass rc2 = r_class(g, s, f2);
  AffineSubspace blocks(prod.pair_functional(rc1.set.point(), rc2.set.point()),
                        prod.pair_subspace(rc1.set.direction(), rc2.set.direction()));
  return rc_pair.set == blocks;
}

bool dixmier_constancy_check(const LieAlgebra& g, const Filtration& s, const Vec& f,
                             std::size_t samples, std::uint64_t seed) {
  RClass rc = r_class(g, s, f);
  Vec twisted = twisted_character(g, f, rc.pol.space);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    Vec member = sample_affine(rc.set, rng);
    Polarization pm = vergne_polarization(g, s, member);
    if (!(pm.space == rc.pol.space)) return false;
    if (pm.space.basis().apply(member) != rc.restriction) return false;
    if (twisted_character(g, member, pm.space) != twisted) return false;
  }
  return true;
}

}  // namespace liefilt
