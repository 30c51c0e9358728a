#include "liefilt/problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace liefilt {

namespace {

struct Token {
  enum Kind { Ident, Number, Sym } kind;
  std::string text;
  int line;
  int col;
};

using Line = std::vector<Token>;

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    Line line;
    std::size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      int col = static_cast<int>(i) + 1;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < raw.size() &&
               (std::isalnum(static_cast<unsigned char>(raw[j])) || raw[j] == '_'))
          ++j;
        line.push_back({Token::Ident, raw.substr(i, j - i), lineno, col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < raw.size() && std::isdigit(static_cast<unsigned char>(raw[j]))) ++j;
        if (j < raw.size() && raw[j] == '/') {
          std::size_t k = j + 1;
          while (k < raw.size() && std::isdigit(static_cast<unsigned char>(raw[k]))) ++k;
          if (k == j + 1) throw ParseError("malformed rational", lineno, static_cast<int>(j) + 1);
          j = k;
        }
        line.push_back({Token::Number, raw.substr(i, j - i), lineno, col});
        i = j;
      } else if (c == '+' || c == '-' || c == '*' || c == '=' || c == ',') {
        line.push_back({Token::Sym, std::string(1, c), lineno, col});
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", lineno, col);
      }
    }
    if (!line.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(msg + " (near '" + t.text + "')", t.line, t.col);
}

[[noreturn]] void fail_line(const Line& line, const std::string& msg) {
  const Token& t = line.back();
  throw ParseError(msg, t.line, t.col + static_cast<int>(t.text.size()));
}

bool is_sym(const Token& t, const char* s) { return t.kind == Token::Sym && t.text == s; }
bool is_kw(const Token& t, const char* s) { return t.kind == Token::Ident && t.text == s; }

// lincomb := '0' | [sign] term { ('+'|'-') term },  term := (rational '*')? name
Vec parse_lincomb(const Line& line, std::size_t& i, const std::map<std::string, std::size_t>& names,
                  std::size_t dim) {
  Vec v(dim);
  if (i < line.size() && line[i].kind == Token::Number && line[i].text == "0" &&
      (i + 1 == line.size() || is_sym(line[i + 1], ",") || is_kw(line[i + 1], "repeat"))) {
    ++i;
    return v;
  }
  bool expect_term = true;
  Rational sign = 1;
  while (i < line.size()) {
    const Token& t = line[i];
    if (is_sym(t, ",") || is_kw(t, "repeat")) break;
    if (is_sym(t, "+") || is_sym(t, "-")) {
      if (expect_term && !(sign == 1)) fail(t, "dangling sign");
      sign = sign * (t.text == "-" ? -1 : 1);
      expect_term = true;
      ++i;
      continue;
    }
    if (!expect_term) fail(t, "missing '+' or '-' between terms");
    Rational coeff = sign;
    if (t.kind == Token::Number) {
      coeff *= parse_rational(t.text);
      ++i;
      if (i >= line.size() || !is_sym(line[i], "*"))
        fail(t, "coefficient must be followed by '*name'");
      ++i;
    }
    if (i >= line.size() || line[i].kind != Token::Ident) fail(line[i - 1], "expected basis name");
    auto it = names.find(line[i].text);
    if (it == names.end()) fail(line[i], "unknown basis name");
    v[it->second] += coeff;
    ++i;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) {
    if (i > 0)
      fail(line[i - 1], "expected a term");
    else
      fail(line[0], "expected a term");
  }
  return v;
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  return idx;
}

}  // namespace

const Vec* ProblemFile::find_functional(const std::string& name) const {
  for (const auto& [n, v] : functionals)
    if (n == name) return &v;
  return nullptr;
}

const Subspace* ProblemFile::find_subalgebra(const std::string& name) const {
  for (const auto& [n, s] : subalgebras)
    if (n == name) return &s;
  return nullptr;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (a.algebra_name != b.algebra_name || a.filtration_name != b.filtration_name) return false;
  if (a.algebra.names() != b.algebra.names()) return false;
  const std::size_t n = a.algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.algebra.table(i, j) != b.algebra.table(i, j)) return false;
  if (a.filtration.has_value() != b.filtration.has_value()) return false;
  if (a.filtration && !(a.filtration->ideals == b.filtration->ideals)) return false;
  return a.functionals == b.functionals && a.subalgebras == b.subalgebras;
}

ProblemFile parse_problem(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  ProblemFile pf;
  bool have_algebra = false;
  std::map<std::string, std::size_t> names;
  std::vector<std::string> used_names;

  auto check_fresh = [&](const Token& t) {
    if (std::find(used_names.begin(), used_names.end(), t.text) != used_names.end())
      fail(t, "name already in use");
    used_names.push_back(t.text);
  };

  std::size_t li = 0;
  while (li < lines.size()) {
    const Line& line = lines[li];
    const Token& head = line[0];
    if (is_kw(head, "algebra")) {
      if (have_algebra) fail(head, "only one algebra block is allowed");
      if (line.size() != 2 || line[1].kind != Token::Ident) fail(head, "usage: algebra <name>");
      check_fresh(line[1]);
      pf.algebra_name = line[1].text;
      ++li;
      std::vector<std::string> basis;
      std::vector<std::tuple<std::size_t, std::size_t, Vec>> brackets;
      std::vector<Line> bracket_lines;
      bool closed = false;
      while (li < lines.size()) {
        const Line& bl = lines[li];
        if (is_kw(bl[0], "end")) {
          closed = true;
          ++li;
          break;
        }
        if (is_kw(bl[0], "basis")) {
          if (!basis.empty()) fail(bl[0], "duplicate basis line");
          for (std::size_t i = 1; i < bl.size(); ++i) {
            if (bl[i].kind != Token::Ident) fail(bl[i], "basis entries must be identifiers");
            if (std::find(basis.begin(), basis.end(), bl[i].text) != basis.end())
              fail(bl[i], "duplicate basis name");
            basis.push_back(bl[i].text);
          }
          if (basis.empty()) fail_line(bl, "empty basis");
        } else if (is_kw(bl[0], "bracket")) {
          bracket_lines.push_back(bl);
        } else {
          fail(bl[0], "expected 'basis', 'bracket' or 'end'");
        }
        ++li;
      }
      if (!closed) fail(head, "algebra block is missing 'end'");
      if (basis.empty()) fail(head, "algebra block has no basis");
      names = name_index(basis);
      for (const Line& bl : bracket_lines) {
        if (bl.size() < 5 || bl[1].kind != Token::Ident || bl[2].kind != Token::Ident ||
            !is_sym(bl[3], "="))
          fail(bl[0], "usage: bracket <a> <b> = <lincomb>");
        auto ia = names.find(bl[1].text);
        auto ib = names.find(bl[2].text);
        if (ia == names.end()) fail(bl[1], "unknown basis name");
        if (ib == names.end()) fail(bl[2], "unknown basis name");
        std::size_t i = 4;
        Vec v = parse_lincomb(bl, i, names, basis.size());
        if (i != bl.size()) fail(bl[i], "trailing tokens after bracket value");
        brackets.emplace_back(ia->second, ib->second, std::move(v));
      }
      pf.algebra = LieAlgebra::from_brackets(basis, brackets);
      have_algebra = true;
      continue;
    }
    if (!have_algebra) fail(head, "the algebra block must come first");
    if (is_kw(head, "filtration")) {
      if (pf.filtration) fail(head, "only one filtration block is allowed");
      if (line.size() != 2 || line[1].kind != Token::Ident) fail(head, "usage: filtration <name>");
      check_fresh(line[1]);
      pf.filtration_name = line[1].text;
      Filtration s;
      ++li;
      bool closed = false;
      while (li < lines.size()) {
        const Line& sl = lines[li];
        if (is_kw(sl[0], "end")) {
          closed = true;
          ++li;
          break;
        }
        if (!is_kw(sl[0], "step")) fail(sl[0], "expected 'step' or 'end'");
        std::vector<Vec> gens;
        std::size_t i = 1;
        if (i < sl.size() && is_kw(sl[i], "zero")) {
          ++i;
        } else {
          while (true) {
            gens.push_back(parse_lincomb(sl, i, names, pf.algebra.dim()));
            if (i < sl.size() && is_sym(sl[i], ",")) {
              ++i;
              continue;
            }
            break;
          }
        }
        std::size_t repeat = 1;
        if (i < sl.size() && is_kw(sl[i], "repeat")) {
          ++i;
          if (i >= sl.size() || sl[i].kind != Token::Number)
            fail(sl[i - 1], "repeat needs a count");
          repeat = std::stoul(sl[i].text);
          if (repeat == 0) fail(sl[i], "repeat count must be positive");
          ++i;
        }
        if (i != sl.size()) fail(sl[i], "trailing tokens after step");
        Subspace sp = Subspace::span(gens, pf.algebra.dim());
        for (std::size_t r = 0; r < repeat; ++r) s.ideals.push_back(sp);
        ++li;
      }
      if (!closed) fail(head, "filtration block is missing 'end'");
      if (s.ideals.empty()) fail(head, "filtration block has no steps");
      pf.filtration = std::move(s);
      continue;
    }
    if (is_kw(head, "functional")) {
      if (line.size() < 3 || line[1].kind != Token::Ident || !is_sym(line[2], "="))
        fail(head, "usage: functional <name> = <values...>");
      check_fresh(line[1]);
      std::vector<Rational> vals;
      std::size_t i = 3;
      while (i < line.size()) {
        Rational sign = 1;
        if (is_sym(line[i], "-")) {
          sign = -1;
          ++i;
        } else if (is_sym(line[i], "+")) {
          ++i;
        }
        if (i >= line.size() || line[i].kind != Token::Number)
          fail(line[i < line.size() ? i : line.size() - 1], "expected a rational value");
        vals.push_back(sign * parse_rational(line[i].text));
        ++i;
      }
      if (vals.size() != pf.algebra.dim())
        fail_line(line, "expected one value per basis vector");
      pf.functionals.emplace_back(line[1].text, Vec(std::move(vals)));
      ++li;
      continue;
    }
    if (is_kw(head, "subalgebra")) {
      if (line.size() < 4 || line[1].kind != Token::Ident || !is_sym(line[2], "="))
        fail(head, "usage: subalgebra <name> = <lincomb>, ...");
      check_fresh(line[1]);
      std::vector<Vec> gens;
      std::size_t i = 3;
      while (true) {
        gens.push_back(parse_lincomb(line, i, names, pf.algebra.dim()));
        if (i < line.size() && is_sym(line[i], ",")) {
          ++i;
          continue;
        }
        break;
      }
      if (i != line.size()) fail(line[i], "trailing tokens after subalgebra");
      pf.subalgebras.emplace_back(line[1].text, Subspace::span(gens, pf.algebra.dim()));
      ++li;
      continue;
    }
    fail(head, "expected 'algebra', 'filtration', 'functional' or 'subalgebra'");
  }
  if (!have_algebra) throw ParseError("no algebra block found", 1, 1);
  return pf;
}

ValidationReport validate_problem(const ProblemFile& pf) {
  ValidationReport rep = validate_algebra(pf.algebra);
  if (pf.filtration)
    for (auto& v : validate_filtration(pf.algebra, *pf.filtration).violations)
      rep.add("filtration " + pf.filtration_name + ": " + v);
  for (const auto& [name, space] : pf.subalgebras) {
    for (std::size_t i = 0; i < space.dim(); ++i)
      for (std::size_t j = i + 1; j < space.dim(); ++j) {
        Vec br = pf.algebra.bracket(space.basis_vector(i), space.basis_vector(j));
        if (!space.contains(br))
          rep.add("subalgebra " + name + ": not closed, [" +
                  lincomb_string(pf.algebra, space.basis_vector(i)) + ", " +
                  lincomb_string(pf.algebra, space.basis_vector(j)) + "] = " +
                  lincomb_string(pf.algebra, br) + " escapes");
      }
  }
  return rep;
}

std::string lincomb_string(const LieAlgebra& g, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += to_string(c) + "*";
    out += g.names()[i];
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const ProblemFile& pf) {
  std::ostringstream os;
  os << "algebra " << pf.algebra_name << "\n";
  os << "  basis";
  for (const auto& n : pf.algebra.names()) os << " " << n;
  os << "\n";
  for (std::size_t i = 0; i < pf.algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < pf.algebra.dim(); ++j)
      if (!pf.algebra.table(i, j).is_zero())
        os << "  bracket " << pf.algebra.names()[i] << " " << pf.algebra.names()[j] << " = "
           << lincomb_string(pf.algebra, pf.algebra.table(i, j)) << "\n";
  os << "end\n";
  if (pf.filtration) {
    os << "\nfiltration " << pf.filtration_name << "\n";
    const auto& ideals = pf.filtration->ideals;
    for (std::size_t i = 0; i < ideals.size();) {
      std::size_t j = i;
      while (j < ideals.size() && ideals[j] == ideals[i]) ++j;
      os << "  step";
      if (ideals[i].dim() == 0) {
        os << " zero";
      } else {
        for (std::size_t r = 0; r < ideals[i].dim(); ++r)
          os << (r ? ", " : " ") << lincomb_string(pf.algebra, ideals[i].basis_vector(r));
      }
      if (j - i > 1) os << " repeat " << (j - i);
      os << "\n";
      i = j;
    }
    os << "end\n";
  }
  for (const auto& [name, v] : pf.functionals) {
    os << "\nfunctional " << name << " =";
    for (const auto& c : v) os << " " << to_string(c);
    os << "\n";
  }
  for (const auto& [name, space] : pf.subalgebras) {
    os << "\nsubalgebra " << name << " =";
    if (space.dim() == 0)
      os << " 0";
    else
      for (std::size_t r = 0; r < space.dim(); ++r)
        os << (r ? ", " : " ") << lincomb_string(pf.algebra, space.basis_vector(r));
    os << "\n";
  }
  return os.str();
}

namespace {
const std::map<std::string, std::string>& builtin_map() {
  static const std::map<std::string, std::string> examples = {
      {"axb",
       "# Two-dimensional non-abelian algebra with [x, y] = y.\n"
       "algebra axb\n"
       "  basis x y\n"
       "  bracket x y = y\n"
       "end\n"
       "\n"
       "filtration s\n"
       "  step x, y\n"
       "  step y\n"
       "  step zero\n"
       "end\n"
       "\n"
       "functional f = 0 1\n"
       "functional g = 1 0\n"
       "\n"
       "subalgebra h = y\n"},
      {"heisenberg",
       "# Heisenberg algebra with [x, y] = z.\n"
       "algebra heisenberg\n"
       "  basis x y z\n"
       "  bracket x y = z\n"
       "end\n"
       "\n"
       "filtration s\n"
       "  step x, y, z\n"
       "  step y, z\n"
       "  step z\n"
       "  step zero\n"
       "end\n"
       "\n"
       "functional f = 0 0 1\n"
       "functional g = 0 1 1\n"
       "functional fneg = 0 0 -1\n"
       "\n"
       "subalgebra h = y, z\n"},
  };
  return examples;
}
}  // namespace

const std::string& builtin_example(const std::string& name) {
  const auto& m = builtin_map();
  auto it = m.find(name);
  if (it == m.end()) throw ParseError("unknown built-in example '" + name + "'", 0, 0);
  return it->second;
}

std::vector<std::string> builtin_example_names() {
  std::vector<std::string> names;
  for (const auto& [n, t] : builtin_map()) names.push_back(n);
  return names;
}

}  // namespace liefilt
