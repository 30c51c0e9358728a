#pragma once

#include "liefilt/algebra.hpp"

namespace liefilt {

// Functionals on g are coordinate rows in the dual basis; f(v) = dot(f, v).

// B[i][j] = f([b_i, b_j]) over a's basis rows.
Mat skew_form(const LieAlgebra& g, const Vec& f, const Subspace& a);

// {x in a : f([x, a]) = 0}, embedded back into g.
Subspace stabilizer_in(const LieAlgebra& g, const Vec& f, const Subspace& a);

// Stabilizer of f in g, kernel of the full skew form.
Subspace stabilizer(const LieAlgebra& g, const Vec& f);

// {x in g : f1([x, g1]) = 0} for f1 given on g1's RREF basis; g1 must be
// an ideal so that the brackets land back in g1.
Subspace relative_stabilizer(const LieAlgebra& g, const Subspace& g1, const Vec& f1);

struct Polarization {
  Subspace space;
  Vec functional;  // the f it polarizes, on g
};

bool is_polarization(const LieAlgebra& g, const Subspace& p, const Vec& f);

// Sum of the stabilizers of f restricted to every filtration member.
// Validates its own output; failure is an implementation bug.
Polarization vergne_polarization(const LieAlgebra& g, const Filtration& s, const Vec& f);

// [t, p] inside p.
bool ad_invariant(const LieAlgebra& g, const Subspace& p, const Vec& t);

// Character x -> (1/2) tr(ad_x on g/p) on p's basis, for a subalgebra p.
Vec theta(const LieAlgebra& g, const Subspace& p);

// (f - theta_p) restricted to p; requires p to be a polarization of f.
Vec twisted_character(const LieAlgebra& g, const Vec& f, const Subspace& p);

}  // namespace liefilt
