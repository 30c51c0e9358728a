// Acceptance harness: runs every gating criterion at its stated size and
// tolerance (everything here is exact arithmetic) and prints one line per
// criterion. Arguments: path to the CLI binary, path to the bundled data
// directory.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "liefilt/checks.hpp"

using namespace liefilt;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& cmdline) {
  int ret = std::system(cmdline.c_str());
  if (ret == -1) return -1;
  return WIFEXITED(ret) ? WEXITSTATUS(ret) : -1;
}

bool suite_ok(const CheckResult& r, std::string& detail) {
  std::ostringstream os;
  os << r.cases << " cases";
  if (!r.ok()) os << ", first failure: " << r.failures.front();
  detail = os.str();
  return r.ok() && r.cases > 0;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::string data_dir = argc > 2 ? argv[2] : "data";

  CheckOptions opts;
  opts.seed = 42;
  opts.instances = 100;
  opts.max_dim = 6;
  opts.degree = 4;
  std::vector<Instance> corpus = make_corpus(opts.seed, opts.instances, opts.max_dim);

  // 1: the two-dimensional example, exactly.
  {
    auto start = Clock::now();
    LieAlgebra ab = fixtures::axb();
    Filtration s = fixtures::axb_filtration();
    bool ok = true;
    RClass rc = r_class(ab, s, Vec{0, 1});
    ok = ok && rc.pol.space == Subspace::span({Vec{0, 1}}, 2);
    ok = ok && rc.set == AffineSubspace(Vec{0, 1}, Subspace::span({Vec{1, 0}}, 2));
    for (Rational alpha : {Rational(0), Rational(5), Rational(-2, 3)}) {
      RClass pt = r_class(ab, s, Vec{alpha, 0});
      ok = ok && pt.pol.space == Subspace::full(2);
      ok = ok && pt.set == AffineSubspace::single_point(Vec{alpha, 0});
    }
    double ms = ms_since(start);
    report(1, "two-dimensional example reproduces exactly", ok && ms < 1000.0,
           std::to_string(static_cast<int>(ms)) + " ms");
  }

  // 2: the Heisenberg example, exactly.
  {
    auto start = Clock::now();
    LieAlgebra h3 = fixtures::heisenberg();
    Filtration s = fixtures::heisenberg_filtration();
    bool ok = true;
    for (auto [y0, z0] : std::vector<std::pair<Rational, Rational>>{
             {0, 1}, {2, 1}, {Rational(1, 2), Rational(-3, 7)}}) {
      RClass rc = r_class(h3, s, Vec{0, y0, z0});
      ok = ok && rc.pol.space == Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3);
      ok = ok && rc.set == AffineSubspace(Vec{0, y0, z0}, Subspace::span({Vec{1, 0, 0}}, 3));
    }
    for (auto [x0, y0] :
         std::vector<std::pair<Rational, Rational>>{{0, 0}, {3, 0}, {1, Rational(-1, 2)}}) {
      RClass rc = r_class(h3, s, Vec{x0, y0, 0});
      ok = ok && rc.pol.space == Subspace::full(3);
      ok = ok && rc.set == AffineSubspace::single_point(Vec{x0, y0, 0});
    }
    double ms = ms_since(start);
    report(2, "Heisenberg example reproduces exactly", ok && ms < 1000.0,
           std::to_string(static_cast<int>(ms)) + " ms");
  }

  // 3: polarization suite on the generated corpus.
  {
    auto start = Clock::now();
    CheckResult pol = check_vergne_polarization(corpus, opts);
    CheckResult compat = check_vergne_compatibility(corpus, opts);
    double ms = ms_since(start);
    std::string d1, d2;
    bool ok = suite_ok(pol, d1) && suite_ok(compat, d2) && corpus.size() >= 100 && ms < 30000.0;
    report(3, "Vergne polarization suite on " + std::to_string(corpus.size()) + " instances", ok,
           d1 + "; compatibility " + d2 + "; " + std::to_string(static_cast<int>(ms)) + " ms");
  }

  // 4: class membership and separation.
  {
    std::string d;
    CheckResult r = check_class_members(corpus, opts, 20);
    report(4, "sampled class members share pv and equivalence, perturbed ones split",
           suite_ok(r, d), d);
  }

  // 5: representation identity.
  {
    std::string d;
    CheckResult r = check_representation_identity(corpus, opts, 50);
    report(5, "bracket action identity on random module elements", suite_ok(r, d), d);
  }

  // 6: Weyl realization on the Heisenberg module, hand values.
  {
    LieAlgebra h3 = fixtures::heisenberg();
    InducedModule mod =
        InducedModule::from_polarization(h3, fixtures::heisenberg_filtration(), Vec{0, 0, 1});
    bool ok = mod.complement_size() == 1;
    for (int k = 0; k <= 10 && ok; ++k) {
      Element xk = Element::monomial(Monomial{k});
      Element dy = mod.act(Vec{0, 1, 0}, xk);
      Element dz = mod.act(Vec{0, 0, 1}, xk);
      Element dx = mod.act(Vec{1, 0, 0}, xk);
      ok = ok && dy == Element::monomial(Monomial{k > 0 ? k - 1 : 0}, Rational(-k));
      ok = ok && dz == xk && dx == Element::monomial(Monomial{k + 1});
    }
    report(6, "Heisenberg module realizes the Weyl-algebra action for k <= 10", ok);
  }

  // 7: highest vectors identify the polarization exactly.
  {
    std::string d;
    CheckResult r = check_highest_vectors(corpus, opts);
    report(7, "highest-vector systems solve to {(v, f(v)) : v in pv(f)}", suite_ok(r, d), d);
  }

  // 8: maximal-submodule shape at bounded degree.
  {
    std::string d;
    CheckResult r = check_maximal_submodule_shape(corpus, opts);
    bool ok = suite_ok(r, d) && r.cases >= 30;
    report(8, "U(g)(t - a)l meets K[t]l in span{t^i (t - a) l : i < D}", ok, d);
  }

  // 9: spectra cross-checks plus the tensor example.
  {
    std::vector<Instance> half(corpus.begin(), corpus.begin() + 50);
    std::string d;
    CheckResult r = check_spectra_crosscheck(half, opts, 20);
    LieAlgebra h3 = fixtures::heisenberg();
    Filtration s = fixtures::heisenberg_filtration();
    bool tensor_exact =
        spec_tensor_space(h3, s, Vec{0, 0, 1}, Vec{0, 0, -1}) ==
        AffineSubspace(Vec{0, 0, 0}, Subspace::span({Vec{1, 0, 0}}, 3));
    report(9, "spectra membership routes agree on 50 instances; tensor example exact",
           suite_ok(r, d) && tensor_exact, d);
  }

  // 10: transversality extensions and bounded slice structure.
  {
    std::string d1, d2, d3, d4;
    CheckResult ext = check_stabilizer_transversality(corpus, opts);
    CheckResult slices = check_filtration_slices(corpus, opts);
    CheckResult shift = check_t_shift_filtration(corpus, opts);
    CheckResult kill = check_highest_line_killing(corpus, opts);
    bool ok = suite_ok(ext, d1) && suite_ok(slices, d2) && suite_ok(shift, d3) &&
              suite_ok(kill, d4);
    report(10, "stabilizer transversality and bounded slice properties at D = 4", ok,
           "extensions " + d1 + "; slices " + d2 + "; shifts " + d3 + "; killing " + d4);
  }

  // 11: constancy of twisted characters on classes.
  {
    std::string d;
    CheckResult r = check_dixmier_constancy(corpus, opts, 20);
    report(11, "twisted characters constant across 20 samples per class", suite_ok(r, d), d);
  }

  // 12: CLI round trip, determinism, exit codes.
  {
    bool ok = true;
    std::string detail;
    for (const std::string& name : {std::string("axb"), std::string("heisenberg")}) {
      std::string text = slurp(data_dir + "/" + name + ".lf");
      if (text.empty()) {
        ok = false;
        detail = "missing bundled file " + name;
        break;
      }
      ProblemFile pf = parse_problem(text);
      if (!validate_problem(pf).ok() || !(parse_problem(to_text(pf)) == pf)) {
        ok = false;
        detail = "round trip failed for " + name;
        break;
      }
    }
    if (cli.empty()) {
      ok = false;
      detail = "no CLI path given";
    } else if (ok) {
      int e1 = run_cli("'" + cli + "' check-all --seed 42 -n 100 > acc_run1.txt 2>/dev/null");
      int e2 = run_cli("'" + cli + "' check-all --seed 42 -n 100 > acc_run2.txt 2>/dev/null");
      std::string r1 = slurp("acc_run1.txt"), r2 = slurp("acc_run2.txt");
      if (e1 != 0 || e2 != 0 || r1.empty() || r1 != r2) {
        ok = false;
        detail = "check-all not deterministic or failing";
      } else {
        std::ofstream("acc_bad_validation.lf")
            << "algebra a\n  basis x y z\n  bracket x y = x\n  bracket y z = y\n"
               "  bracket z x = z\nend\n";
        std::ofstream("acc_bad_parse.lf") << "algebra a\n  basis x\n  bracket x q = x\nend\n";
        int good = run_cli("'" + cli + "' --file '" + data_dir +
                           "/heisenberg.lf' validate > /dev/null 2>&1");
        int invalid =
            run_cli("'" + cli + "' --file acc_bad_validation.lf validate > /dev/null 2>&1");
        int malformed = run_cli("'" + cli + "' --file acc_bad_parse.lf validate > /dev/null 2>&1");
        if (good != 0 || invalid != 1 || malformed != 2) {
          ok = false;
          detail = "exit codes were " + std::to_string(good) + "/" + std::to_string(invalid) +
                   "/" + std::to_string(malformed) + ", want 0/1/2";
        } else {
          detail = "round trip, bytewise determinism, exit codes 0/1/2";
        }
      }
    }
    report(12, "CLI round trip, determinism and exit codes", ok, detail);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " ("
            << (12 - g_failures) << "/12 criteria)\n";
  return g_failures == 0 ? 0 : 1;
}
