#include "liefilt/algebra.hpp"

#include <tuple>

namespace liefilt {

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::vector<std::vector<Vec>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (table_.size() != n) throw DimensionError("structure table has wrong row count");
  for (const auto& row : table_) {
    if (row.size() != n) throw DimensionError("structure table has wrong column count");
    for (const Vec& v : row)
      if (v.size() != n) throw DimensionError("structure constant has wrong dimension");
  }
}

LieAlgebra LieAlgebra::from_brackets(
    std::vector<std::string> names,
    const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& brackets) {
  const std::size_t n = names.size();
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n)));
  for (const auto& [i, j, v] : brackets) {
    table[i][j] = v;
    table[j][i] = Vec(n) - v;
  }
  return LieAlgebra(std::move(names), std::move(table));
}

Vec LieAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v[i] = 1;
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionError("bracket argument dimension mismatch");
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      const Vec& t = table_[i][j];
      for (std::size_t k = 0; k < n; ++k) r[k] += c * t[k];
    }
  }
  return r;
}

Subspace LieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      gens.push_back(bracket(a.basis_vector(i), b.basis_vector(j)));
  return Subspace::span(gens, dim());
}

std::vector<Subspace> LieAlgebra::derived_series() const {
  std::vector<Subspace> series{Subspace::full(dim())};
  while (true) {
    Subspace next = bracket_span(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

ValidationReport validate_algebra(const LieAlgebra& a) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.table(i, i).is_zero())
      rep.add("[" + a.names()[i] + "," + a.names()[i] + "] is nonzero");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(a.table(i, j) + a.table(j, i)).is_zero())
        rep.add("antisymmetry fails on (" + a.names()[i] + "," + a.names()[j] + ")");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec sum = a.bracket(a.table(i, j), a.basis_vector(k)) +
                  a.bracket(a.table(j, k), a.basis_vector(i)) +
                  a.bracket(a.table(k, i), a.basis_vector(j));
        if (!sum.is_zero())
          rep.add("Jacobi fails on (" + a.names()[i] + "," + a.names()[j] + "," + a.names()[k] +
                  ")");
      }
  if (rep.ok()) {
    // Only meaningful once the bracket is a Lie bracket.
    if (a.derived_series().back().dim() != 0) rep.add("derived series does not reach zero");
  }
  return rep;
}

std::optional<std::size_t> Filtration::first_proper() const {
  for (std::size_t i = 1; i < ideals.size(); ++i)
    if (ideals[i].dim() + 1 == ideals[0].dim()) return i;
  return std::nullopt;
}

Filtration Filtration::restricted_to(std::size_t i) const {
  const Subspace& g = ideals[i];
  Filtration tail;
  for (std::size_t j = i; j < ideals.size(); ++j) {
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < ideals[j].dim(); ++r) {
      auto c = g.coordinates(ideals[j].basis_vector(r));
      if (!c) throw InternalError("filtration member escapes an earlier member");
      gens.push_back(*c);
    }
    tail.ideals.push_back(Subspace::span(gens, g.dim()));
  }
  return tail;
}

ValidationReport validate_filtration(const LieAlgebra& a, const Filtration& s) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  if (s.ideals.empty()) {
    rep.add("filtration is empty");
    return rep;
  }
  for (const Subspace& g : s.ideals)
    if (g.ambient_dim() != n) {
      rep.add("filtration member has wrong ambient dimension");
      return rep;
    }
  if (s.ideals.front().dim() != n) rep.add("first member is not the whole algebra");
  if (s.ideals.back().dim() != 0) rep.add("last member is not zero");
  for (std::size_t i = 1; i < s.ideals.size(); ++i) {
    if (!subspace_leq(s.ideals[i], s.ideals[i - 1]))
      rep.add("member " + std::to_string(i) + " is not contained in member " +
              std::to_string(i - 1));
    std::size_t step = s.ideals[i - 1].dim() - s.ideals[i].dim();
    if (step > 1)
      rep.add("codimension step " + std::to_string(step) + " at member " + std::to_string(i));
  }
  for (std::size_t i = 0; i < s.ideals.size(); ++i) {
    const Subspace& g = s.ideals[i];
    for (std::size_t b = 0; b < n && rep.ok(); ++b)
      for (std::size_t r = 0; r < g.dim(); ++r)
        if (!g.contains(a.bracket(a.basis_vector(b), g.basis_vector(r)))) {
          rep.add("member " + std::to_string(i) + " is not an ideal: [" + a.names()[b] +
                  ", member basis " + std::to_string(r) + "] escapes");
          break;
        }
  }
  return rep;
}

namespace {
std::vector<Subspace> dedup(const std::vector<Subspace>& xs) {
  std::vector<Subspace> out;
  for (const Subspace& x : xs)
    if (out.empty() || !(out.back() == x)) out.push_back(x);
  return out;
}
}  // namespace

bool filtrations_equal(const Filtration& a, const Filtration& b) {
  return dedup(a.ideals) == dedup(b.ideals);
}

Subalgebra::Subalgebra(const LieAlgebra& parent, Subspace space)
    : space_(std::move(space)),
      algebra_({}, {}) {
  const std::size_t r = space_.dim();
  std::vector<std::string> names(r);
  for (std::size_t i = 0; i < r; ++i) {
    Vec b = space_.basis_vector(i);
    // Reuse the parent's name when the basis row is a standard vector.
    std::size_t hits = 0, where = 0;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) {
        ++hits;
        where = j;
      }
    if (hits == 1 && b[where] == 1)
      names[i] = parent.names()[where];
    else
      names[i] = "h" + std::to_string(i + 1);
  }
  std::vector<std::vector<Vec>> table(r, std::vector<Vec>(r, Vec(r)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Vec br = parent.bracket(space_.basis_vector(i), space_.basis_vector(j));
      auto c = space_.coordinates(br);
      if (!c) throw DimensionError("space is not closed under the bracket");
      table[i][j] = *c;
    }
  algebra_ = LieAlgebra(std::move(names), std::move(table));
}

Vec Subalgebra::restrict_functional(const Vec& f) const { return space_.basis().apply(f); }

Vec Subalgebra::embed(const Vec& v) const { return space_.basis().transpose().apply(v); }

Subspace Subalgebra::embed_subspace(const Subspace& s) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(embed(s.basis_vector(i)));
  return Subspace::span(gens, space_.ambient_dim());
}

Subspace Subalgebra::meet_in_sub(const Subspace& s) const {
  Subspace meet = subspace_intersect(s, space_);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < meet.dim(); ++i) {
    auto c = space_.coordinates(meet.basis_vector(i));
    if (!c) throw InternalError("intersection escapes the subalgebra");
    gens.push_back(*c);
  }
  return Subspace::span(gens, space_.dim());
}

Filtration induced_filtration(const Subalgebra& h, const Filtration& s) {
  Filtration out;
  for (const Subspace& g : s.ideals) out.ideals.push_back(h.meet_in_sub(g));
  return out;
}

ValidationReport validate_homomorphism(const LieAlgebra& src, const Filtration& src_s,
                                       const LieAlgebra& dst, const Filtration& dst_s,
                                       const FilteredHom& phi) {
  ValidationReport rep;
  const Mat& l = phi.matrix;
  if (l.rows() != dst.dim() || l.cols() != src.dim()) {
    rep.add("matrix shape does not match the algebras");
    return rep;
  }
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      Vec lhs = l.apply(src.table(i, j));
      Vec rhs = dst.bracket(l.apply(src.basis_vector(i)), l.apply(src.basis_vector(j)));
      if (lhs != rhs)
        rep.add("bracket is not preserved on (" + src.names()[i] + "," + src.names()[j] + ")");
    }
  if (src_s.ideals.size() != dst_s.ideals.size())
    rep.add("filtrations have different lengths");
  else
    for (std::size_t i = 0; i < src_s.ideals.size(); ++i)
      for (std::size_t r = 0; r < src_s.ideals[i].dim(); ++r)
        if (!dst_s.ideals[i].contains(l.apply(src_s.ideals[i].basis_vector(r)))) {
          rep.add("image of member " + std::to_string(i) + " escapes the target member");
          break;
        }
  return rep;
}

Vec ProductAlgebra::left(const Vec& x) const {
  const std::size_t n = algebra.dim() / 2;
  Vec v(2 * n);
  for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
  return v;
}

Vec ProductAlgebra::right(const Vec& x) const {
  const std::size_t n = algebra.dim() / 2;
  Vec v(2 * n);
  for (std::size_t i = 0; i < n; ++i) v[n + i] = x[i];
  return v;
}

Vec ProductAlgebra::pair_functional(const Vec& f1, const Vec& f2) const {
  return left(f1) + right(f2);
}

Subspace ProductAlgebra::pair_subspace(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(left(a.basis_vector(i)));
  for (std::size_t i = 0; i < b.dim(); ++i) gens.push_back(right(b.basis_vector(i)));
  return Subspace::span(gens, algebra.dim());
}

ProductAlgebra product_algebra(const LieAlgebra& a, const Filtration& s) {
  const std::size_t n = a.dim();
  std::vector<std::string> names(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = a.names()[i] + "_1";
    names[n + i] = a.names()[i] + "_2";
  }
  std::vector<std::vector<Vec>> table(2 * n, std::vector<Vec>(2 * n, Vec(2 * n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& t = a.table(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        table[i][j][k] = t[k];
        table[n + i][n + j][n + k] = t[k];
      }
    }
  ProductAlgebra prod{LieAlgebra(std::move(names), std::move(table)), {}};
  const std::size_t k = s.ideals.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    prod.filtration.ideals.push_back(prod.pair_subspace(s.ideals[i], s.ideals[i]));
    prod.filtration.ideals.push_back(prod.pair_subspace(s.ideals[i], s.ideals[i + 1]));
  }
  prod.filtration.ideals.push_back(prod.pair_subspace(s.ideals.back(), s.ideals.back()));
  return prod;
}

DiagonalEmbedding diagonal_embedding(const LieAlgebra& a, const Filtration& s) {
  const std::size_t n = a.dim();
  Mat l(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    l.at(i, i) = 1;
    l.at(n + i, i) = 1;
  }
  // Pulling s x s back through the diagonal doubles every proper member.
  Filtration doubled;
  const std::size_t k = s.ideals.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    doubled.ideals.push_back(s.ideals[i]);
    doubled.ideals.push_back(s.ideals[i + 1]);
  }
  doubled.ideals.push_back(s.ideals.back());
  return DiagonalEmbedding{FilteredHom{std::move(l)}, std::move(doubled)};
}

}  // namespace liefilt
