#include "liefilt/pbw.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace liefilt {

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<Monomial> enumerate_monomials(std::size_t vars, int max_degree) {
  std::vector<Monomial> out;
  Monomial cur(vars, 0);
  // Graded-lex ascending: by total degree, then lexicographically.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == vars) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t before = out.size();
    rec(rec, 0, d);
    std::sort(out.begin() + before, out.end());
  }
  return out;
}

std::optional<int> Element::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int md = monomial_degree(m);
    if (!d || md > *d) d = md;
  }
  return d;
}

void Element::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element Element::monomial(Monomial m, Rational c) {
  Element e;
  e.add(m, c);
  return e;
}

namespace {

std::string vector_name(const LieAlgebra& g, const Vec& v, const std::string& fallback) {
  std::size_t hits = 0, where = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) {
      ++hits;
      where = j;
    }
  if (hits == 1 && v[where] == 1) return g.names()[where];
  return fallback;
}

AdaptedBasis finish_adapted(const LieAlgebra& g, std::vector<Vec> complement, const Subspace& p,
                            std::vector<std::string> names) {
  const std::size_t n = g.dim();
  AdaptedBasis b;
  b.complement_size = complement.size();
  std::vector<Vec> rows = std::move(complement);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    rows.push_back(p.basis_vector(i));
    names.push_back(vector_name(g, rows.back(), "p" + std::to_string(i + 1)));
  }
  if (rows.size() != n) throw InternalError("adapted basis has wrong size");
  b.rows = Mat::from_rows(rows, n);
  auto inv = inverse(b.rows.transpose());
  if (!inv) throw InternalError("adapted basis is singular");
  b.to_adapted = std::move(*inv);
  b.letter_names = std::move(names);
  b.bracket.assign(n, std::vector<Vec>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      b.bracket[a][c] = b.to_adapted.apply(g.bracket(rows[a], rows[c]));
  return b;
}

}  // namespace

AdaptedBasis make_adapted_standard(const LieAlgebra& g, const Subspace& p) {
  const std::size_t n = g.dim();
  if (p.ambient_dim() != n) throw DimensionError("subalgebra has wrong ambient dimension");
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : p.pivots()) is_pivot[c] = true;
  std::vector<Vec> complement;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec e(n);
    e[j] = 1;
    complement.push_back(std::move(e));
    names.push_back(g.names()[j]);
  }
  return finish_adapted(g, std::move(complement), p, std::move(names));
}

AdaptedBasis make_adapted_aligned(const LieAlgebra& g, const Subspace& p, const Subspace& g1,
                                  const Vec& t) {
  if (!subspace_leq(p, g1)) throw DimensionError("p must sit inside g1 for an aligned basis");
  if (g1.contains(t)) throw DimensionError("t must lie outside g1");
  std::vector<Vec> complement{t};
  std::vector<std::string> names{vector_name(g, t, "t")};
  Subspace have = subspace_sum(p, Subspace::span({t}, g.dim()));
  for (std::size_t i = 0; i < g1.dim(); ++i) {
    Vec cand = g1.basis_vector(i);
    if (have.contains(cand)) continue;
    have = subspace_sum(have, Subspace::span({cand}, g.dim()));
    names.push_back(vector_name(g, cand, "c" + std::to_string(complement.size())));
    complement.push_back(std::move(cand));
  }
  return finish_adapted(g, std::move(complement), p, std::move(names));
}

Element NormalOrderer::mul_letter(int letter, const Monomial& m) const {
  const std::size_t n = letters();
  std::size_t i = 0;
  while (i < n && m[i] == 0) ++i;
  if (i == n || static_cast<std::size_t>(letter) <= i) {
    Monomial out = m;
    out[letter] += 1;
    return Element::monomial(std::move(out));
  }
  auto key = std::make_pair(letter, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // x_letter x_i = x_i x_letter + [x_letter, x_i], applied to the rest.
  Monomial rest = m;
  rest[i] -= 1;
  Element res = mul_letter(static_cast<int>(i), mul_letter(letter, rest));
  const Vec& br = basis_.bracket[letter][i];
  for (std::size_t k = 0; k < n; ++k)
    if (br[k] != 0) {
      Element part = mul_letter(static_cast<int>(k), rest);
      part *= br[k];
      res += part;
    }
  memo_.emplace(std::move(key), res);
  return res;
}

Element NormalOrderer::mul_letter(int letter, const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Element part = mul_letter(letter, m);
    part *= c;
    out += part;
  }
  return out;
}

Element NormalOrderer::normal_order(const std::vector<int>& word) const {
  Element e = Element::monomial(Monomial(letters(), 0));
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = mul_letter(*it, e);
  return e;
}

Element NormalOrderer::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    Element part = b;
    for (std::size_t letter = letters(); letter-- > 0;)
      for (int rep = 0; rep < ma[letter]; ++rep) part = mul_letter(static_cast<int>(letter), part);
    part *= ca;
    out += part;
  }
  return out;
}

InducedModule::InducedModule(LieAlgebra g, Subspace p, Vec chi, AdaptedBasis basis)
    : g_(std::move(g)), p_(std::move(p)), chi_(std::move(chi)), orderer_(std::move(basis)) {
  if (chi_.size() != p_.dim()) throw DimensionError("character has wrong dimension");
  for (std::size_t i = 0; i < p_.dim(); ++i)
    for (std::size_t j = i + 1; j < p_.dim(); ++j) {
      Vec br = g_.bracket(p_.basis_vector(i), p_.basis_vector(j));
      auto c = p_.coordinates(br);
      if (!c) throw DimensionError("inducing subspace is not a subalgebra");
      if (dot(chi_, *c) != 0) throw DimensionError("chi does not vanish on [p,p]");
    }
}

InducedModule InducedModule::from_character(const LieAlgebra& g, const Subspace& p,
                                            const Vec& chi) {
  return from_character(g, p, chi, make_adapted_standard(g, p));
}

InducedModule InducedModule::from_character(const LieAlgebra& g, const Subspace& p, const Vec& chi,
                                            AdaptedBasis basis) {
  return InducedModule(g, p, chi, std::move(basis));
}

InducedModule InducedModule::from_polarization(const LieAlgebra& g, const Filtration& s,
                                               const Vec& f) {
  Polarization pol = vergne_polarization(g, s, f);
  Vec chi = pol.space.basis().apply(f);
  return from_character(g, pol.space, chi);
}

Element InducedModule::cyclic() const {
  return Element::monomial(Monomial(complement_size(), 0));
}

Element InducedModule::project_tail(const Element& uea) const {
  const std::size_t n = g_.dim();
  const std::size_t m = complement_size();
  Element out;
  for (const auto& [mono, c] : uea.terms()) {
    Rational coeff = c;
    for (std::size_t j = m; j < n && coeff != 0; ++j)
      for (int rep = 0; rep < mono[j]; ++rep) coeff *= chi_[j - m];
    if (coeff == 0) continue;
    Monomial head(mono.begin(), mono.begin() + m);
    out.add(head, coeff);
  }
  return out;
}

Element InducedModule::act(const Vec& x, const Element& v) const {
  const std::size_t n = g_.dim();
  const std::size_t m = complement_size();
  if (x.size() != n) throw DimensionError("vector does not live in the algebra");
  for (const auto& [mono, c] : v.terms())
    if (mono.size() != m) throw DimensionError("element does not belong to this module");
  Vec xa = adapted().to_adapted.apply(x);
  Element out;
  for (const auto& [mono, c] : v.terms()) {
    Monomial full(n, 0);
    std::copy(mono.begin(), mono.end(), full.begin());
    for (std::size_t letter = 0; letter < n; ++letter) {
      if (xa[letter] == 0) continue;
      Element part = project_tail(orderer_.mul_letter(static_cast<int>(letter), full));
      part *= xa[letter] * c;
      out += part;
    }
  }
  return out;
}

Element InducedModule::act_word(const VecWord& word, Element v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
  return v;
}

Element InducedModule::act_expr(const VecExpr& expr, const Element& v) const {
  Element out;
  for (const auto& [c, word] : expr) {
    Element part = act_word(word, v);
    part *= c;
    out += part;
  }
  return out;
}

std::string InducedModule::render(const Element& v) const {
  if (v.is_zero()) return "0";
  // Leading (graded-lex greatest) term first.
  std::vector<const std::pair<const Monomial, Rational>*> terms;
  for (const auto& t : v.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
    int da = monomial_degree(a->first), db = monomial_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : terms) {
    const auto& [mono, c] = *t;
    if (!first) os << (c < 0 ? " - " : " + ");
    Rational shown = (!first && c < 0) ? Rational(-c) : c;
    first = false;
    std::string vars;
    for (std::size_t j = 0; j < mono.size(); ++j) {
      if (mono[j] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += adapted().letter_names[j];
      if (mono[j] > 1) vars += "^" + std::to_string(mono[j]);
    }
    if (vars.empty())
      os << to_string(shown);
    else if (shown == 1)
      os << vars;
    else if (shown == -1)
      os << "-" << vars;
    else
      os << to_string(shown) << " * " << vars;
  }
  return os.str();
}

std::optional<int> t_degree(const Element& v, std::size_t letter) {
  std::optional<int> d;
  for (const auto& [m, c] : v.terms()) {
    if (letter >= m.size()) throw DimensionError("letter index out of range");
    if (!d || m[letter] > *d) d = m[letter];
  }
  return d;
}

Subspace highest_vectors(const InducedModule& mod, int max_degree) {
  if (max_degree < 1) throw DimensionError("degree bound must be at least 1");
  const std::size_t n = mod.algebra().dim();
  Element l = mod.cyclic();
  std::vector<Element> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(mod.act(mod.algebra().basis_vector(i), l));
  Element minus_l = Rational(-1) * l;
  cols.push_back(minus_l);
  // Rows of the system: one per monomial appearing anywhere.
  std::map<Monomial, std::size_t> row_of;
  for (const Element& e : cols)
    for (const auto& [m, c] : e.terms()) row_of.emplace(m, row_of.size());
  Mat sys(row_of.size(), n + 1);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, c] : cols[j].terms()) sys.at(row_of[m], j) = c;
  return kernel(sys);
}

SliceBasis SliceBasis::over(std::size_t vars, int max_degree) {
  SliceBasis s;
  s.monomials = enumerate_monomials(vars, max_degree);
  for (std::size_t i = 0; i < s.monomials.size(); ++i) s.index.emplace(s.monomials[i], i);
  return s;
}

Vec SliceBasis::coords(const Element& v) const {
  Vec out(size());
  for (const auto& [m, c] : v.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw DimensionError("element exceeds the degree slice");
    out[it->second] = c;
  }
  return out;
}

Subspace bounded_submodule(const InducedModule& mod, const std::vector<Element>& gens,
                           int max_degree) {
  SliceBasis slice = SliceBasis::over(mod.complement_size(), max_degree);
  const std::size_t n = mod.algebra().dim();
  std::vector<Vec> rows;
  for (const Element& gen : gens) {
    auto dg = gen.degree();
    if (!dg) continue;
    if (*dg > max_degree) throw DimensionError("generator exceeds the degree bound");
    for (const Monomial& u : enumerate_monomials(n, max_degree - *dg)) {
      VecWord word;
      for (std::size_t letter = 0; letter < n; ++letter)
        for (int rep = 0; rep < u[letter]; ++rep) word.push_back(mod.adapted().rows.row(letter));
      rows.push_back(slice.coords(mod.act_word(word, gen)));
    }
  }
  return Subspace::span(rows, slice.size());
}

Subspace module_filtration_slice(const InducedModule& mod, const Filtration& s, std::size_t i,
                                 int max_degree) {
  if (i >= s.ideals.size()) throw DimensionError("filtration index out of range");
  SliceBasis slice = SliceBasis::over(mod.complement_size(), max_degree);
  const Subspace& gi = s.ideals[i];
  std::vector<Vec> rows;
  for (const Monomial& u : enumerate_monomials(gi.dim(), max_degree)) {
    VecWord word;
    for (std::size_t b = 0; b < gi.dim(); ++b)
      for (int rep = 0; rep < u[b]; ++rep) word.push_back(gi.basis_vector(b));
    rows.push_back(slice.coords(mod.act_word(word, mod.cyclic())));
  }
  return Subspace::span(rows, slice.size());
}

}  // namespace liefilt
