#include "liefilt/rational.hpp"

#include <cctype>

namespace liefilt {

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> ParseError {
    return ParseError("invalid rational literal '" + text + "'", 0, 0);
  };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(Integer(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'", 0, 0);
  return Rational(Integer(num), d);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace liefilt
