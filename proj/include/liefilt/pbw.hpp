#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liefilt/polar.hpp"

namespace liefilt {

// Exponent vector over an ordered set of letters.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);

// Monomials of degree <= max_degree over `vars` letters, graded-lex ascending.
std::vector<Monomial> enumerate_monomials(std::size_t vars, int max_degree);

// Finite Q-linear combination of monomials; used both for normal-ordered
// enveloping-algebra elements (letters = a full adapted basis) and module
// elements (letters = the complement variables only).
class Element {
 public:
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -infinity is represented as no value.
  std::optional<int> degree() const;

  void add(const Monomial& m, const Rational& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  static Element monomial(Monomial m, Rational c = 1);

 private:
  std::map<Monomial, Rational> terms_;
};

// Basis of g reordered for PBW straightening: complement letters of a
// subalgebra p first, p's RREF basis last.
struct AdaptedBasis {
  Mat rows;         // row a = adapted vector a, standard coordinates
  Mat to_adapted;   // adapted coordinates of v = to_adapted * v
  std::size_t complement_size = 0;  // m; letters m..n-1 span p
  std::vector<std::string> letter_names;
  std::vector<std::vector<Vec>> bracket;  // adapted coords of [row_a, row_b]
};

// Complement letters are the standard basis vectors at p's non-pivot
// columns, in ascending column order.
AdaptedBasis make_adapted_standard(const LieAlgebra& g, const Subspace& p);

// Complement letters are t (which must lie outside g1) followed by a
// deterministic extension of p's basis to g1; p must sit inside g1.
// Letter 0 then carries the t-degree grading of the module.
AdaptedBasis make_adapted_aligned(const LieAlgebra& g, const Subspace& p, const Subspace& g1,
                                  const Vec& t);

// PBW straightening engine over an adapted basis, with a memoized
// letter-times-monomial product table.
class NormalOrderer {
 public:
  explicit NormalOrderer(AdaptedBasis basis) : basis_(std::move(basis)) {}

  const AdaptedBasis& basis() const { return basis_; }
  std::size_t letters() const { return basis_.rows.rows(); }

  // x_letter * m, normal ordered.
  Element mul_letter(int letter, const Monomial& m) const;
  Element mul_letter(int letter, const Element& e) const;
  // Straightens an arbitrary word of letters (leftmost factor first).
  Element normal_order(const std::vector<int>& word) const;
  // Product of two normal-ordered elements.
  Element mul(const Element& a, const Element& b) const;

 private:
  AdaptedBasis basis_;
  mutable std::map<std::pair<int, Monomial>, Element> memo_;
};

// A sum of scalar-weighted words of algebra vectors, the shape in which
// enveloping-algebra operators enter from callers.
using VecWord = std::vector<Vec>;
using VecExpr = std::vector<std::pair<Rational, VecWord>>;

// Module induced by a character chi of a subalgebra p: free module on the
// complement monomials, p acting through chi on the cyclic vector l.
class InducedModule {
 public:
  static InducedModule from_character(const LieAlgebra& g, const Subspace& p, const Vec& chi);
  static InducedModule from_character(const LieAlgebra& g, const Subspace& p, const Vec& chi,
                                      AdaptedBasis basis);
  // M(f): induced by f restricted to the Vergne polarization of f.
  static InducedModule from_polarization(const LieAlgebra& g, const Filtration& s, const Vec& f);

  const LieAlgebra& algebra() const { return g_; }
  const Subspace& inducing_subalgebra() const { return p_; }
  const Vec& character() const { return chi_; }
  const AdaptedBasis& adapted() const { return orderer_.basis(); }
  std::size_t complement_size() const { return adapted().complement_size; }

  Element cyclic() const;  // l = 1 (x) 1

  Element act(const Vec& x, const Element& v) const;
  // Word acts as an operator product: the rightmost factor acts first.
  Element act_word(const VecWord& word, Element v) const;
  Element act_expr(const VecExpr& expr, const Element& v) const;

  std::string render(const Element& v) const;

 private:
  InducedModule(LieAlgebra g, Subspace p, Vec chi, AdaptedBasis basis);

  Element project_tail(const Element& uea) const;

  LieAlgebra g_;
  Subspace p_;
  Vec chi_;  // values on the adapted p letters
  NormalOrderer orderer_;
};

// Max exponent of the given complement letter; no value for the zero element.
std::optional<int> t_degree(const Element& v, std::size_t letter);

// Solution space of (y - lambda) l = 0 inside g (+) K, as a subspace of
// Q^(n+1) with lambda in the last coordinate. The linear system closes in
// the degree-one slice; max_degree only gates the precondition D >= 1.
Subspace highest_vectors(const InducedModule& mod, int max_degree);

// Coordinates on the degree-bounded slice of a module.
struct SliceBasis {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;

  static SliceBasis over(std::size_t vars, int max_degree);
  std::size_t size() const { return monomials.size(); }
  Vec coords(const Element& v) const;
};

// Span of { u g : u a PBW monomial over the adapted letters with
// deg u + deg g <= max_degree }, inside the degree slice.
Subspace bounded_submodule(const InducedModule& mod, const std::vector<Element>& gens,
                           int max_degree);

// Degree slice of U(g_i) l inside the module.
Subspace module_filtration_slice(const InducedModule& mod, const Filtration& s, std::size_t i,
                                 int max_degree);

}  // namespace liefilt
