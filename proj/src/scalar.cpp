#include "fueterkit/scalar.hpp"

#include <cmath>

namespace fueterkit {

namespace {

// decimal only; GMP's string constructor would read a leading 0 as octal
BigInt parse_decimal_int(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  while (i + 1 < s.size() && s[i] == '0') ++i;
  std::string digits = s.substr(i);
  if (digits.empty()) throw ParseError("empty integer literal");
  BigInt v(digits);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      BigInt num = parse_decimal_int(s.substr(0, slash));
      BigInt den = parse_decimal_int(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    auto epos = s.find_first_of("eE");
    long exp10 = 0;
    if (epos != std::string::npos) {
      exp10 = std::stol(s.substr(epos + 1));
      s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    BigInt num;
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      exp10 -= static_cast<long>(s.size() - dot - 1);
      num = parse_decimal_int(digits.empty() || digits == "-" || digits == "+" ? "0"
                                                                               : digits);
    } else {
      num = parse_decimal_int(s);
    }
    Rational r(num);
    BigInt p10 = pow(BigInt(10), static_cast<unsigned>(std::abs(exp10)));
    if (exp10 > 0) r *= p10;
    if (exp10 < 0) r /= p10;
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
}

std::string rational_str(const Rational& q) { return q.str(); }

BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

double FieldScalar::modulus() const { return std::sqrt(modulus_sq().convert_to<double>()); }

FieldScalar FieldScalar::inverse() const {
  Rational m = modulus_sq();
  if (m == 0) throw NotInvertibleError("division by zero field scalar");
  return {re / m, -im / m};
}

std::string FieldScalar::str() const {
  if (im == 0) return rational_str(re);
  std::string s = rational_str(re);
  s += (im > 0 ? "+" : "-");
  Rational a = abs(im);
  s += rational_str(a) + "i";
  return s;
}

FieldScalar parse_field_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.back() == 'i') {
    // split at the sign that separates real and imaginary parts (skip a
    // leading sign and signs inside exponents)
    std::string body = s.substr(0, s.size() - 1);
    for (size_t i = body.size(); i-- > 1;) {
      char c = body[i];
      if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E' &&
          body[i - 1] != '/') {
        Rational re = parse_rational(body.substr(0, i));
        std::string imtxt = body.substr(i);
        if (imtxt == "+" || imtxt == "-") imtxt += "1";
        return {re, parse_rational(imtxt)};
      }
    }
    std::string imtxt = body;
    if (imtxt.empty() || imtxt == "+" || imtxt == "-") imtxt += "1";
    return {Rational(0), parse_rational(imtxt)};
  }
  return {parse_rational(s)};
}

}  // namespace fueterkit
