#pragma once

#include <string>
#include <vector>

#include "liefilt/algebra.hpp"

namespace liefilt {

// Parsed problem description: one algebra, at most one filtration, named
// functionals (dual-basis coordinate rows) and named subalgebra spaces.
struct ProblemFile {
  std::string algebra_name;
  LieAlgebra algebra{{}, {}};
  std::string filtration_name;
  std::optional<Filtration> filtration;
  std::vector<std::pair<std::string, Vec>> functionals;
  std::vector<std::pair<std::string, Subspace>> subalgebras;

  const Vec* find_functional(const std::string& name) const;
  const Subspace* find_subalgebra(const std::string& name) const;

  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

// Grammar errors carry line and column; name clashes and unknown names are
// grammar errors too. Axiom violations are left to validate_problem.
ProblemFile parse_problem(const std::string& text);

// Algebra axioms, filtration axioms, subalgebra closure.
ValidationReport validate_problem(const ProblemFile& pf);

// Canonical rendering; parse_problem(to_text(pf)) == pf.
std::string to_text(const ProblemFile& pf);

// Renders a vector as a linear combination of basis names, e.g. "x - 2*z".
std::string lincomb_string(const LieAlgebra& g, const Vec& v);

// Built-in examples; throws ParseError on unknown names.
const std::string& builtin_example(const std::string& name);
std::vector<std::string> builtin_example_names();

}  // namespace liefilt
