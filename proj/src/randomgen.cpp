#include "liefilt/randomgen.hpp"

#include <algorithm>

namespace liefilt {

namespace {

// Strictly upper-triangular nn x nn matrices. Basis pairs (i,j), i < j,
// ordered by level j - i ascending; the span of every suffix is an ideal
// because brackets raise the level.
Instance upper_triangular(std::size_t nn) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t level = 1; level < nn; ++level)
    for (std::size_t i = 0; i + level < nn; ++i) pairs.emplace_back(i, i + level);
  const std::size_t n = pairs.size();
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a)
    names[a] =
        "e" + std::to_string(pairs[a].first + 1) + std::to_string(pairs[a].second + 1);
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n)));
  auto index_of = [&](std::size_t i, std::size_t j) -> std::ptrdiff_t {
    for (std::size_t a = 0; a < n; ++a)
      if (pairs[a] == std::make_pair(i, j)) return static_cast<std::ptrdiff_t>(a);
    return -1;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      // [E_ij, E_kl] = d_jk E_il - d_li E_kj
      if (j == k) {
        auto c = index_of(i, l);
        if (c >= 0) table[a][b][static_cast<std::size_t>(c)] += 1;
      }
      if (l == i) {
        auto c = index_of(k, j);
        if (c >= 0) table[a][b][static_cast<std::size_t>(c)] -= 1;
      }
    }
  Instance inst{LieAlgebra(std::move(names), std::move(table)), {}, "ut" + std::to_string(nn)};
  for (std::size_t drop = 0; drop <= n; ++drop) {
    std::vector<Vec> gens;
    for (std::size_t a = drop; a < n; ++a) gens.push_back(inst.algebra.basis_vector(a));
    inst.filtration.ideals.push_back(Subspace::span(gens, n));
  }
  return inst;
}

// One-dimensional extension: given structure constants on the suffix
// e_2..e_n, prepend e_1 acting by a derivation that keeps every suffix
// span invariant, so the whole flag stays a chain of ideals.
std::vector<std::vector<Vec>> extend_by_derivation(const std::vector<std::vector<Vec>>& ct,
                                                   std::mt19937_64& rng) {
  const std::size_t d = ct.size();
  // Unknowns D[r][c] for r >= c (D e_c lands in span{e_c..}).
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = c; r < d; ++r) vars.emplace_back(r, c);
  auto var_index = [&](std::size_t r, std::size_t c) -> std::ptrdiff_t {
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (vars[v] == std::make_pair(r, c)) return static_cast<std::ptrdiff_t>(v);
    return -1;
  };
  // Derivation identity D[e_a,e_b] = [D e_a, e_b] + [e_a, D e_b].
  std::vector<Vec> eqs;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k) {
        Vec eq(vars.size());
        for (std::size_t c = 0; c < d; ++c) {
          auto v = var_index(k, c);
          if (v >= 0) eq[static_cast<std::size_t>(v)] += ct[a][b][c];
        }
        for (std::size_t r = 0; r < d; ++r) {
          auto va = var_index(r, a);
          if (va >= 0) eq[static_cast<std::size_t>(va)] -= ct[r][b][k];
          auto vb = var_index(r, b);
          if (vb >= 0) eq[static_cast<std::size_t>(vb)] -= ct[a][r][k];
        }
        eqs.push_back(std::move(eq));
      }
  Subspace solutions =
      eqs.empty() ? Subspace::full(vars.size()) : kernel(Mat::from_rows(eqs, vars.size()));
  std::uniform_int_distribution<int> coeff(-2, 2);
  Vec choice(vars.size());
  for (std::size_t i = 0; i < solutions.dim(); ++i) {
    int c = coeff(rng);
    if (c != 0) choice += Rational(c) * solutions.basis_vector(i);
  }
  // Assemble the (d+1)-dimensional table; index 0 is the new generator.
  std::vector<std::vector<Vec>> table(d + 1, std::vector<Vec>(d + 1, Vec(d + 1)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k) table[a + 1][b + 1][k + 1] = ct[a][b][k];
  for (std::size_t v = 0; v < vars.size(); ++v) {
    auto [r, c] = vars[v];
    table[0][c + 1][r + 1] += choice[v];
    table[c + 1][0][r + 1] -= choice[v];
  }
  return table;
}

Instance extension_tower(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<Vec>> ct;  // starts at dimension zero
  for (std::size_t step = 0; step < n; ++step) ct = extend_by_derivation(ct, rng);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "t" + std::to_string(i + 1);
  Instance inst{LieAlgebra(std::move(names), std::move(ct)), {}, "ext" + std::to_string(n)};
  for (std::size_t drop = 0; drop <= n; ++drop) {
    std::vector<Vec> gens;
    for (std::size_t a = drop; a < n; ++a) gens.push_back(inst.algebra.basis_vector(a));
    inst.filtration.ideals.push_back(Subspace::span(gens, n));
  }
  return inst;
}

}  // namespace

Instance generate_random(const RandomSpec& spec) {
  if (spec.max_dim > 8) throw DimensionError("dimension cap is 8");
  std::mt19937_64 rng(spec.seed);
  RandomSpec::Family fam = spec.family;
  if (fam == RandomSpec::Mixed)
    fam = (rng() % 2 == 0) ? RandomSpec::UpperTriangular : RandomSpec::Extension;
  if (fam == RandomSpec::UpperTriangular) {
    // Matrix sizes whose strictly-triangular dimension fits the range.
    std::vector<std::size_t> sizes;
    for (std::size_t nn = 2; nn <= 5; ++nn) {
      std::size_t dim = nn * (nn - 1) / 2;
      if (dim >= spec.min_dim && dim <= spec.max_dim) sizes.push_back(nn);
    }
    if (sizes.empty()) return extension_tower(spec.max_dim, rng);
    return upper_triangular(sizes[rng() % sizes.size()]);
  }
  std::uniform_int_distribution<std::size_t> dim_dist(spec.min_dim, spec.max_dim);
  return extension_tower(dim_dist(rng), rng);
}

Vec random_functional(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den_pick(0, 3);
  Vec f(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    int d = den_pick(rng) == 0 ? 2 : 1;
    f[i] = Rational(num(rng), d);
  }
  return f;
}

Subspace random_subalgebra(const LieAlgebra& g, const Filtration& s, std::mt19937_64& rng) {
  const std::size_t n = g.dim();
  switch (rng() % 4) {
    case 0:
      return Subspace::full(n);
    case 1:
      return s.ideals[rng() % s.ideals.size()];
    default: {
      std::size_t count = 1 + rng() % 2;
      std::vector<Vec> gens;
      for (std::size_t i = 0; i < count; ++i) gens.push_back(random_functional(n, rng));
      Subspace space = Subspace::span(gens, n);
      while (true) {
        Subspace next = subspace_sum(space, g.bracket_span(space, space));
        if (next == space) break;
        space = next;
      }
      return space;
    }
  }
}

}  // namespace liefilt
