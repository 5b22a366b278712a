#include "rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>
#include <cstdlib>

#include "errors.hpp"

namespace rcross {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t");
  const auto last = raw.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("bad rational literal: " + raw);
  const std::string text = raw.substr(first, last - first + 1);
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw ParseError("bad rational literal: " + text);
    Int d(den);
    if (d == 0) throw ParseError("zero denominator: " + text);
    return Rational(Int(num), d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) frac = "0";
    if (!is_integer_token(whole) || !is_integer_token(frac))
      throw ParseError("bad rational literal: " + text);
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int value = Int(whole) * scale;
    Int tail(frac);
    value += neg ? -tail : tail;
    return Rational(value, scale);
  }
  if (!is_integer_token(text)) throw ParseError("bad rational literal: " + text);
  return Rational(Int(text));
}

std::string format_rational(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) s += "/" + denominator(value).str();
  return s;
}

std::string decimal_fixed(const Rational& value, int digits) {
  Int num = numerator(value);
  Int den = denominator(value);
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero on the scaled value.
  Int scaled = (num * scale * 2 + den) / (den * 2);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string fs = frac.str();
  if (static_cast<int>(fs.size()) < digits)
    fs.insert(fs.begin(), digits - fs.size(), '0');
  std::string out = whole.str();
  if (digits > 0) out += "." + fs;
  if (neg && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

Int isqrt_floor(const Int& value) {
  if (value < 0) throw ParameterError("isqrt of negative value");
  if (value == 0) return 0;
  return boost::multiprecision::sqrt(value);
}

int sign_of(const Rational& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

}  // namespace rcross
