#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liefilt/checks.hpp"

using json = nlohmann::json;
using namespace liefilt;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

json subspace_json(const LieAlgebra& g, const Subspace& s) {
  json b = json::array();
  json coords = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    b.push_back(lincomb_string(g, s.basis_vector(i)));
    coords.push_back(vec_json(s.basis_vector(i)));
  }
  return json{{"dim", s.dim()}, {"basis", b}, {"basis_coords", coords}};
}

// An affine set of functionals, reported as the equations eta(b_i) = v_i
// together with its free dimension.
json functional_set_json(const LieAlgebra& g, const AffineSubspace& set) {
  Subspace constraints = annihilator(set.direction());
  json eqs = json::array();
  for (std::size_t i = 0; i < constraints.dim(); ++i) {
    Vec b = constraints.basis_vector(i);
    eqs.push_back(json{{"on", lincomb_string(g, b)}, {"value", to_string(dot(set.point(), b))}});
  }
  return json{{"free_dim", set.dim()},
              {"point", vec_json(set.point())},
              {"direction", subspace_json(g, set.direction())},
              {"equations", eqs}};
}

void print_functional_set(std::ostream& os, const LieAlgebra& g, const AffineSubspace& set,
                          const std::string& sym) {
  Subspace constraints = annihilator(set.direction());
  if (constraints.dim() == 0) {
    os << "  all of the dual space (dim " << set.dim() << ")\n";
    return;
  }
  for (std::size_t i = 0; i < constraints.dim(); ++i) {
    Vec b = constraints.basis_vector(i);
    os << "  " << sym << "(" << lincomb_string(g, b) << ") = " << to_string(dot(set.point(), b))
       << "\n";
  }
  os << "  free dimension: " << set.dim() << "\n";
}

const Vec& named_functional(const ProblemFile& pf, const std::string& name) {
  const Vec* f = pf.find_functional(name);
  if (!f) throw UsageError("unknown functional '" + name + "'");
  return *f;
}

const Subspace& named_subalgebra(const ProblemFile& pf, const std::string& name) {
  const Subspace* s = pf.find_subalgebra(name);
  if (!s) throw UsageError("unknown subalgebra '" + name + "'");
  return *s;
}

const Filtration& need_filtration(const ProblemFile& pf) {
  if (!pf.filtration) throw UsageError("this command needs a filtration block");
  return *pf.filtration;
}

// expr := [sign] term { ('+'|'-') term },  term := (rational '*')? factor
// ('*' factor)*,  factor := name ['^' int].  Words multiply left to right.
VecExpr parse_uea_expr(const std::string& text, const LieAlgebra& g) {
  std::map<std::string, std::size_t> names;
  for (std::size_t i = 0; i < g.dim(); ++i) names.emplace(g.names()[i], i);
  VecExpr expr;
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg + " in element expression", 1, static_cast<int>(i) + 1);
  };
  skip();
  if (i == text.size()) throw fail("empty expression");
  while (i < text.size()) {
    Rational coeff = 1;
    skip();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') coeff = -1;
      ++i;
      skip();
    }
    bool saw_factor = false;
    VecWord word;
    while (i < text.size()) {
      skip();
      if (i == text.size() || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') {
        ++i;
        skip();
      } else if (saw_factor) {
        throw fail("expected '*', '+' or '-'");
      }
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
          ++j;
        coeff *= parse_rational(text.substr(i, j - i));
        i = j;
        saw_factor = true;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      if (j == i) throw fail("expected a basis name");
      auto it = names.find(text.substr(i, j - i));
      if (it == names.end()) throw fail("unknown basis name '" + text.substr(i, j - i) + "'");
      i = j;
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == i) throw fail("expected an exponent");
        power = std::stoi(text.substr(i, k - i));
        i = k;
      }
      for (int p = 0; p < power; ++p) word.push_back(g.basis_vector(it->second));
      saw_factor = true;
    }
    if (!saw_factor) throw fail("expected a term");
    expr.emplace_back(coeff, std::move(word));
  }
  return expr;
}

struct Output {
  bool quiet = false;
  std::string report_path;
  json tree;

  ~Output() = default;
  void flush() const {
    if (report_path.empty()) return;
    std::ofstream out(report_path);
    out << tree.dump(2) << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classifier for representations of solvable Lie algebras with filtrations"};
  app.require_subcommand(1);

  std::string file_path, example_name, report_path;
  int degree = 4;
  std::uint64_t seed = 42;
  bool quiet = false;
  app.add_option("--file", file_path, "problem file to load");
  app.add_option("--example", example_name, "built-in example (axb, heisenberg)");
  app.add_option("--degree", degree, "degree bound for module computations")->default_val(4);
  app.add_option("--seed", seed, "random seed")->default_val(42);
  app.add_option("--report", report_path, "write a JSON report to this path");
  app.add_flag("--quiet", quiet, "suppress human-readable output");

  auto* cmd_validate = app.add_subcommand("validate", "validate the problem file");
  std::string arg_f, arg_g, arg_h, arg_sub, arg_expr, arg_cand;
  int arg_degree = -1;
  auto* cmd_pv = app.add_subcommand("pv", "Vergne polarization of a functional");
  cmd_pv->add_option("f", arg_f)->required();
  auto* cmd_class = app.add_subcommand("class", "equivalence class of a functional");
  cmd_class->add_option("f", arg_f)->required();
  auto* cmd_equiv = app.add_subcommand("equiv", "decide module equivalence");
  cmd_equiv->add_option("f", arg_f)->required();
  cmd_equiv->add_option("g", arg_g)->required();
  auto* cmd_spec_ind = app.add_subcommand("spec-ind", "spectrum of the induced representation");
  cmd_spec_ind->add_option("hfun", arg_h)->required();
  cmd_spec_ind->add_option("subalgebra", arg_sub)->required();
  cmd_spec_ind->add_option("candidate", arg_cand);
  auto* cmd_spec_res = app.add_subcommand("spec-res", "spectrum of the restriction");
  cmd_spec_res->add_option("f", arg_f)->required();
  cmd_spec_res->add_option("subalgebra", arg_sub)->required();
  cmd_spec_res->add_option("candidate", arg_cand);
  auto* cmd_spec_tensor = app.add_subcommand("spec-tensor", "spectrum of the tensor product");
  cmd_spec_tensor->add_option("f", arg_f)->required();
  cmd_spec_tensor->add_option("g", arg_g)->required();
  cmd_spec_tensor->add_option("candidate", arg_cand);
  auto* cmd_act = app.add_subcommand("act", "apply an enveloping-algebra element to l");
  cmd_act->add_option("f", arg_f)->required();
  cmd_act->add_option("expr", arg_expr)->required();
  auto* cmd_highest = app.add_subcommand("highest", "solve (y - lambda) l = 0");
  cmd_highest->add_option("f", arg_f)->required();
  cmd_highest->add_option("D", arg_degree);
  auto* cmd_theta = app.add_subcommand("theta", "half-trace character on pv(f)");
  cmd_theta->add_option("f", arg_f)->required();
  auto* cmd_check = app.add_subcommand("check-all", "run every invariant suite");
  std::size_t check_n = 25;
  cmd_check->add_option("-n,--instances", check_n, "number of random instances")->default_val(25);

  // Global options like --seed and --report may follow the subcommand.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.quiet = quiet;
  out.report_path = report_path;

  try {
    if (cmd_check->parsed()) {
      CheckOptions opts;
      opts.seed = seed;
      opts.instances = check_n;
      opts.degree = degree;
      std::vector<CheckResult> results = run_all_checks(opts);
      std::string text = format_results(results, opts);
      if (!quiet) std::cout << text;
      json arr = json::array();
      bool all_ok = true;
      for (const CheckResult& r : results) {
        all_ok = all_ok && r.ok();
        arr.push_back(json{{"name", r.name},
                           {"cases", r.cases},
                           {"ok", r.ok()},
                           {"failures", r.failures}});
      }
      out.tree = json{{"command", "check-all"},
                      {"seed", seed},
                      {"instances", check_n},
                      {"suites", arr},
                      {"ok", all_ok}};
      out.flush();
      return all_ok ? 0 : 3;
    }

    std::string text;
    if (!file_path.empty() && !example_name.empty())
      throw UsageError("use either --file or --example, not both");
    if (!file_path.empty())
      text = read_file(file_path);
    else if (!example_name.empty())
      text = builtin_example(example_name);
    else
      throw UsageError("a problem is required: pass --file <path> or --example <name>");

    ProblemFile pf = parse_problem(text);
    ValidationReport rep = validate_problem(pf);
    if (cmd_validate->parsed()) {
      out.tree = json{{"command", "validate"},
                      {"algebra", pf.algebra_name},
                      {"dim", pf.algebra.dim()},
                      {"filtration_length", pf.filtration ? pf.filtration->ideals.size() : 0},
                      {"ok", rep.ok()},
                      {"violations", rep.violations}};
      if (!quiet) {
        if (rep.ok()) {
          std::cout << "valid: algebra '" << pf.algebra_name << "' (dim " << pf.algebra.dim()
                    << ")";
          if (pf.filtration)
            std::cout << ", filtration '" << pf.filtration_name << "' with "
                      << pf.filtration->ideals.size() << " members";
          std::cout << "\n";
        } else {
          std::cout << "invalid:\n";
          for (const auto& v : rep.violations) std::cout << "  - " << v << "\n";
        }
      }
      out.flush();
      return rep.ok() ? 0 : 1;
    }
    if (!rep.ok()) {
      std::cerr << "problem fails validation:\n";
      for (const auto& v : rep.violations) std::cerr << "  - " << v << "\n";
      return 1;
    }

    const LieAlgebra& g = pf.algebra;

    if (cmd_pv->parsed()) {
      const Vec& f = named_functional(pf, arg_f);
      Polarization pol = vergne_polarization(g, need_filtration(pf), f);
      bool iso = is_polarization(g, pol.space, f);
      if (!quiet) {
        std::cout << "pv(" << arg_f << "): dim " << pol.space.dim() << "\n";
        for (std::size_t i = 0; i < pol.space.dim(); ++i)
          std::cout << "  " << lincomb_string(g, pol.space.basis_vector(i)) << "\n";
        std::cout << "isotropy and dimension check: " << (iso ? "OK" : "FAILED") << "\n";
        std::cout << "stabilizer dim: " << stabilizer(g, f).dim() << "\n";
      }
      out.tree = json{{"command", "pv"},
                      {"functional", arg_f},
                      {"polarization", subspace_json(g, pol.space)},
                      {"stabilizer_dim", stabilizer(g, f).dim()},
                      {"is_polarization", iso}};
      out.flush();
      return 0;
    }
    if (cmd_class->parsed()) {
      const Vec& f = named_functional(pf, arg_f);
      RClass rc = r_class(g, need_filtration(pf), f);
      if (!quiet) {
        std::cout << "class of " << arg_f << ": affine subspace of the dual, dim "
                  << rc.set.dim() << "\n";
        print_functional_set(std::cout, g, rc.set, "g");
        std::cout << "polarization dim: " << rc.pol.space.dim() << "\n";
      }
      out.tree = json{{"command", "class"},
                      {"functional", arg_f},
                      {"set", functional_set_json(g, rc.set)},
                      {"polarization", subspace_json(g, rc.pol.space)}};
      out.flush();
      return 0;
    }
    if (cmd_equiv->parsed()) {
      const Vec& f = named_functional(pf, arg_f);
      const Vec& h = named_functional(pf, arg_g);
      bool eq = modules_equivalent(g, need_filtration(pf), f, h);
      if (!quiet)
        std::cout << arg_f << " and " << arg_g << " induce "
                  << (eq ? "equivalent" : "inequivalent") << " modules\n";
      out.tree = json{{"command", "equiv"}, {"f", arg_f}, {"g", arg_g}, {"equivalent", eq}};
      out.flush();
      return 0;
    }
    if (cmd_spec_ind->parsed()) {
      const Filtration& s = need_filtration(pf);
      Subalgebra h(g, named_subalgebra(pf, arg_sub));
      Vec hf = h.restrict_functional(named_functional(pf, arg_h));
      AffineSubspace space = spec_induced_space(g, s, h, hf);
      json j{{"command", "spec-ind"},
             {"h", arg_h},
             {"subalgebra", arg_sub},
             {"space", functional_set_json(g, space)}};
      if (!quiet) {
        std::cout << "spectrum of the module induced from " << arg_h << "|" << arg_sub
                  << ": classes inside\n";
        print_functional_set(std::cout, g, space, "eta");
      }
      if (!arg_cand.empty()) {
        const Vec& cand = named_functional(pf, arg_cand);
        bool member = spec_induced_member(g, s, h, hf, cand);
        if (member != spec_induced_member_affine(g, s, h, hf, cand))
          throw InternalError("spectrum membership routes disagree");
        if (!quiet)
          std::cout << "candidate " << arg_cand << ": " << (member ? "member" : "not a member")
                    << "\n";
        j["candidate"] = arg_cand;
        j["member"] = member;
      }
      out.tree = std::move(j);
      out.flush();
      return 0;
    }
    if (cmd_spec_res->parsed()) {
      const Filtration& s = need_filtration(pf);
      Subalgebra h(g, named_subalgebra(pf, arg_sub));
      const Vec& f = named_functional(pf, arg_f);
      AffineSubspace space = spec_restrict_space(g, s, f, h);
      json j{{"command", "spec-res"},
             {"f", arg_f},
             {"subalgebra", arg_sub},
             {"space", functional_set_json(h.algebra(), space)}};
      if (!quiet) {
        std::cout << "spectrum of " << arg_f << " restricted to " << arg_sub
                  << ": classes inside (coordinates on the subalgebra)\n";
        print_functional_set(std::cout, h.algebra(), space, "mu");
      }
      if (!arg_cand.empty()) {
        Vec hf = h.restrict_functional(named_functional(pf, arg_cand));
        bool member = spec_restrict_member(g, s, f, h, hf);
        if (member != spec_restrict_member_affine(g, s, f, h, hf))
          throw InternalError("spectrum membership routes disagree");
        if (!quiet)
          std::cout << "candidate " << arg_cand << "|" << arg_sub << ": "
                    << (member ? "member" : "not a member") << "\n";
        j["candidate"] = arg_cand;
        j["member"] = member;
      }
      out.tree = std::move(j);
      out.flush();
      return 0;
    }
    if (cmd_spec_tensor->parsed()) {
      const Filtration& s = need_filtration(pf);
      const Vec& f1 = named_functional(pf, arg_f);
      const Vec& f2 = named_functional(pf, arg_g);
      AffineSubspace space = spec_tensor_space(g, s, f1, f2);
      json j{{"command", "spec-tensor"},
             {"f", arg_f},
             {"g", arg_g},
             {"space", functional_set_json(g, space)}};
      if (!quiet) {
        std::cout << "spectrum of the tensor product of " << arg_f << " and " << arg_g
                  << ": classes inside\n";
        print_functional_set(std::cout, g, space, "g");
      }
      if (!arg_cand.empty()) {
        const Vec& cand = named_functional(pf, arg_cand);
        bool member = spec_tensor_member(g, s, f1, f2, cand);
        if (!quiet)
          std::cout << "candidate " << arg_cand << ": " << (member ? "member" : "not a member")
                    << "\n";
        j["candidate"] = arg_cand;
        j["member"] = member;
      }
      out.tree = std::move(j);
      out.flush();
      return 0;
    }
    if (cmd_act->parsed()) {
      const Vec& f = named_functional(pf, arg_f);
      InducedModule mod = InducedModule::from_polarization(g, need_filtration(pf), f);
      VecExpr expr = parse_uea_expr(arg_expr, g);
      Element result = mod.act_expr(expr, mod.cyclic());
      if (!quiet) std::cout << "(" << arg_expr << ") l = " << mod.render(result) << "\n";
      json terms = json::array();
      for (const auto& [m, c] : result.terms()) {
        json exps = json::array();
        for (int e : m) exps.push_back(e);
        terms.push_back(json{{"coeff", to_string(c)}, {"exponents", exps}});
      }
      out.tree = json{{"command", "act"},
                      {"f", arg_f},
                      {"expr", arg_expr},
                      {"rendered", mod.render(result)},
                      {"terms", terms}};
      out.flush();
      return 0;
    }
    if (cmd_highest->parsed()) {
      const Vec& f = named_functional(pf, arg_f);
      InducedModule mod = InducedModule::from_polarization(g, need_filtration(pf), f);
      Subspace sol = highest_vectors(mod, arg_degree > 0 ? arg_degree : degree);
      if (!quiet) {
        std::cout << "solutions of (y - lambda) l = 0: dim " << sol.dim() << "\n";
        for (std::size_t i = 0; i < sol.dim(); ++i) {
          Vec row = sol.basis_vector(i);
          Vec y(g.dim());
          for (std::size_t j = 0; j < g.dim(); ++j) y[j] = row[j];
          std::cout << "  y = " << lincomb_string(g, y) << ", lambda = "
                    << to_string(row[g.dim()]) << "\n";
        }
      }
      json rows = json::array();
      for (std::size_t i = 0; i < sol.dim(); ++i) rows.push_back(vec_json(sol.basis_vector(i)));
      out.tree = json{{"command", "highest"}, {"f", arg_f}, {"dim", sol.dim()}, {"basis", rows}};
      out.flush();
      return 0;
    }
    if (cmd_theta->parsed()) {
      const Vec& f = named_functional(pf, arg_f);
      Polarization pol = vergne_polarization(g, need_filtration(pf), f);
      Vec th = theta(g, pol.space);
      Vec tw = twisted_character(g, f, pol.space);
      if (!quiet) {
        std::cout << "theta on pv(" << arg_f << "):\n";
        for (std::size_t i = 0; i < pol.space.dim(); ++i)
          std::cout << "  theta(" << lincomb_string(g, pol.space.basis_vector(i))
                    << ") = " << to_string(th[i]) << ", twisted f - theta = " << to_string(tw[i])
                    << "\n";
      }
      out.tree = json{{"command", "theta"},
                      {"f", arg_f},
                      {"polarization", subspace_json(g, pol.space)},
                      {"theta", vec_json(th)},
                      {"twisted", vec_json(tw)}};
      out.flush();
      return 0;
    }
    throw UsageError("no command given");
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.col;
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation (bug): " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
}
