#include "doctest.h"
#include "liefilt/checks.hpp"
#include "liefilt/problem_file.hpp"

using namespace liefilt;

TEST_CASE("built-in examples parse, validate and round-trip") {
  for (const std::string& name : builtin_example_names()) {
    CAPTURE(name);
    ProblemFile pf = parse_problem(builtin_example(name));
    CHECK(validate_problem(pf).ok());
    ProblemFile again = parse_problem(to_text(pf));
    CHECK(pf == again);
    CHECK(to_text(pf) == to_text(again));
  }
  ProblemFile h3 = parse_problem(builtin_example("heisenberg"));
  CHECK(h3.algebra.dim() == 3);
  REQUIRE(h3.filtration.has_value());
  CHECK(h3.filtration->ideals.size() == 4);
  CHECK_THROWS_AS(builtin_example("nope"), ParseError);
}

TEST_CASE("general lincombs, repeats and fractions survive a round trip") {
  std::string text =
      "algebra demo\n"
      "  basis a b c\n"
      "  bracket a b = 1/2*b - c\n"
      "  bracket a c = c\n"
      "end\n"
      "filtration s\n"
      "  step a, b, c repeat 2\n"
      "  step b - c, c\n"
      "  step c\n"
      "  step zero\n"
      "end\n"
      "functional f = -1 3/4 0\n"
      "subalgebra h = b - c, c\n";
  ProblemFile pf = parse_problem(text);
  CHECK(pf.algebra.bracket(Vec{1, 0, 0}, Vec{0, 1, 0}) == Vec{0, Rational(1, 2), -1});
  REQUIRE(pf.filtration.has_value());
  CHECK(pf.filtration->ideals.size() == 5);
  CHECK(pf.filtration->ideals[0] == pf.filtration->ideals[1]);
  CHECK(*pf.find_functional("f") == Vec{-1, Rational(3, 4), 0});
  CHECK(parse_problem(to_text(pf)) == pf);
}

TEST_CASE("grammar errors carry positions") {
  CHECK_THROWS_AS(parse_problem("functional f = 1\n"), ParseError);  // no algebra yet
  try {
    parse_problem("algebra a\n  basis x y\n  bracket x q = y\nend\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("unknown basis name") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_problem("algebra a\n  basis x\n"), ParseError);  // missing end
  CHECK_THROWS_AS(parse_problem("algebra a\n  basis x\nend\nfunctional f = 1 2\n"),
                  ParseError);  // wrong arity
  CHECK_THROWS_AS(parse_problem("algebra a\n  basis x\nend\nfunctional f = 1\nfunctional f = 2\n"),
                  ParseError);  // duplicate name
}

TEST_CASE("validation failures are reported with witnesses") {
  // span{x} is not an ideal of the Heisenberg algebra.
  std::string text =
      "algebra h\n"
      "  basis x y z\n"
      "  bracket x y = z\n"
      "end\n"
      "filtration s\n"
      "  step x, y, z\n"
      "  step y, z\n"
      "  step y\n"
      "  step zero\n"
      "end\n";
  ProblemFile pf = parse_problem(text);
  ValidationReport rep = validate_problem(pf);
  CHECK(!rep.ok());

  std::string bad_sub =
      "algebra h\n"
      "  basis x y z\n"
      "  bracket x y = z\n"
      "end\n"
      "subalgebra s = x, y\n";
  CHECK(!validate_problem(parse_problem(bad_sub)).ok());
}

TEST_CASE("generated instances always validate") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    for (auto family : {RandomSpec::UpperTriangular, RandomSpec::Extension}) {
      RandomSpec spec;
      spec.seed = seed;
      spec.family = family;
      spec.max_dim = 6;
      Instance inst = generate_random(spec);
      CAPTURE(inst.label);
      CHECK(validate_algebra(inst.algebra).ok());
      CHECK(validate_filtration(inst.algebra, inst.filtration).ok());
    }
  }
  // The triangular family at matrix size three is the Heisenberg algebra.
  RandomSpec spec;
  spec.seed = 9;
  spec.family = RandomSpec::UpperTriangular;
  spec.min_dim = 3;
  spec.max_dim = 3;
  Instance inst = generate_random(spec);
  CHECK(inst.algebra.dim() == 3);
  CHECK(inst.algebra.bracket(inst.algebra.basis_vector(0), inst.algebra.basis_vector(1)) ==
        inst.algebra.basis_vector(2));

  // A single extension step from zero is the one-dimensional abelian algebra.
  RandomSpec one;
  one.seed = 3;
  one.family = RandomSpec::Extension;
  one.min_dim = 1;
  one.max_dim = 1;
  Instance tiny = generate_random(one);
  CHECK(tiny.algebra.dim() == 1);
  CHECK(tiny.algebra.table(0, 0).is_zero());
  CHECK(tiny.filtration.ideals.size() == 2);

  // Dimension cap.
  RandomSpec big;
  big.max_dim = 9;
  CHECK_THROWS_AS(generate_random(big), DimensionError);
}

TEST_CASE("check-all output is deterministic for a fixed seed") {
  CheckOptions o;
  o.seed = 7;
  o.instances = 4;
  o.max_dim = 4;
  o.degree = 3;
  std::string a = format_results(run_all_checks(o), o);
  std::string b = format_results(run_all_checks(o), o);
  CHECK(a == b);
  CHECK(a.find("RESULT: PASS") != std::string::npos);
}
