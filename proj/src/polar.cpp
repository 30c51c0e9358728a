#include "liefilt/polar.hpp"

namespace liefilt {

Mat skew_form(const LieAlgebra& g, const Vec& f, const Subspace& a) {
  const std::size_t r = a.dim();
  Mat b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Rational v = dot(f, g.bracket(a.basis_vector(i), a.basis_vector(j)));
      b.at(i, j) = v;
      b.at(j, i) = -v;
    }
  return b;
}

Subspace stabilizer_in(const LieAlgebra& g, const Vec& f, const Subspace& a) {
  Subspace ker = kernel(skew_form(g, f, a));
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec c = ker.basis_vector(i);
    Vec v(g.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (c[j] != 0) v += c[j] * a.basis_vector(j);
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, g.dim());
}

Subspace stabilizer(const LieAlgebra& g, const Vec& f) {
  return stabilizer_in(g, f, Subspace::full(g.dim()));
}

Subspace relative_stabilizer(const LieAlgebra& g, const Subspace& g1, const Vec& f1) {
  if (f1.size() != g1.dim()) throw DimensionError("functional does not live on g1");
  // One linear condition per basis vector of g1: f1([x, b_j]) = 0.
  Mat cond(g1.dim(), g.dim());
  for (std::size_t j = 0; j < g1.dim(); ++j) {
    Vec bj = g1.basis_vector(j);
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Vec br = g.bracket(g.basis_vector(i), bj);
      auto c = g1.coordinates(br);
      if (!c) throw DimensionError("g1 is not an ideal");
      cond.at(j, i) = dot(f1, *c);
    }
  }
  return kernel(cond);
}

bool is_polarization(const LieAlgebra& g, const Subspace& p, const Vec& f) {
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = i + 1; j < p.dim(); ++j) {
      Vec br = g.bracket(p.basis_vector(i), p.basis_vector(j));
      if (!p.contains(br)) return false;  // not a subalgebra
      if (dot(f, br) != 0) return false;  // not isotropic
    }
  return 2 * p.dim() == g.dim() + stabilizer(g, f).dim();
}

Polarization vergne_polarization(const LieAlgebra& g, const Filtration& s, const Vec& f) {
  Subspace sum(g.dim());
  for (const Subspace& gi : s.ideals) sum = subspace_sum(sum, stabilizer_in(g, f, gi));
  if (!is_polarization(g, sum, f))
    throw InternalError("Vergne construction produced a non-polarization");
  return Polarization{std::move(sum), f};
}

bool ad_invariant(const LieAlgebra& g, const Subspace& p, const Vec& t) {
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (!p.contains(g.bracket(t, p.basis_vector(i)))) return false;
  return true;
}

Vec theta(const LieAlgebra& g, const Subspace& p) {
  const std::size_t n = g.dim();
  // Quotient coordinates: reduce modulo p, then read off the entries at
  // p's non-pivot columns (the standard vectors there represent g/p).
  std::vector<std::size_t> complement;
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : p.pivots()) is_pivot[c] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j]) complement.push_back(j);
  }
  Vec th(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Vec b = p.basis_vector(i);
    Rational trace = 0;
    for (std::size_t q = 0; q < complement.size(); ++q) {
      Vec e(n);
      e[complement[q]] = 1;
      Vec img = p.reduce(g.bracket(b, e));
      trace += img[complement[q]];
    }
    th[i] = trace / 2;
  }
  return th;
}

Vec twisted_character(const LieAlgebra& g, const Vec& f, const Subspace& p) {
  if (!is_polarization(g, p, f)) throw DimensionError("p is not a polarization of f");
  Vec restricted = p.basis().apply(f);
  return restricted - theta(g, p);
}

}  // namespace liefilt
