#include "designrank/numeric.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace designrank {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s))
      throw std::invalid_argument("bad rational literal: '" + s + "'");
    return Rational(BigInt(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(BigInt(num), d);
}

std::string rational_to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("non-finite double has no rational value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  int e2 = exp - 53;
  Rational r(scaled);
  if (e2 > 0)
    r *= Rational(BigInt(1) << e2);
  else if (e2 < 0)
    r /= Rational(BigInt(1) << -e2);
  return r;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  assert(res.ec == std::errc());
  return std::string(buf, res.ptr);
}

double double_from_string(const std::string& s) {
  // from_chars rejects a leading '+', but complex_to_string emits one for
  // positive imaginary parts; strip it (never before a second sign).
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (e - b > 1 && *b == '+' && b[1] != '+' && b[1] != '-') ++b;
  double v = 0.0;
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e)
    throw std::invalid_argument("bad floating literal: '" + s + "'");
  return v;
}

Complex complex_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return Complex(double_from_string(s), 0.0);
  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw std::invalid_argument("bad complex literal: '" + s + "'");
  double re = double_from_string(body.substr(0, split));
  double im = double_from_string(body.substr(split));
  return Complex(re, im);
}

std::string complex_to_string(const Complex& z) {
  double im = z.imag() == 0.0 ? 0.0 : z.imag();  // normalize -0
  std::string out = format_double(z.real());
  out += (im < 0.0) ? "-" : "+";
  out += format_double(std::abs(im));
  out += "i";
  return out;
}

}  // namespace designrank
