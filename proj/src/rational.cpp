#include "multispinal/rational.hpp"

#include <cctype>

#include "multispinal/errors.hpp"

namespace multispinal {

namespace {

bool is_decimal(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("ParseError", "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt bigint_from_string(const std::string& s) {
  if (!is_decimal(s)) throw Error("ParseError", "not a decimal integer: \"" + s + "\"");
  return BigInt(s);
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(bigint_from_string(s));
  BigInt num = bigint_from_string(s.substr(0, slash));
  BigInt den = bigint_from_string(s.substr(slash + 1));
  if (den <= 0) throw Error("ParseError", "nonpositive denominator in \"" + s + "\"");
  return make_rational(num, den);
}

}  // namespace multispinal
