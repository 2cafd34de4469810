#include "fatflats/rational.hpp"

#include <cctype>

namespace fatflats {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw DomainError("bad integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw DomainError("bad integer literal: " + std::string(text));
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return make_rational(parse_integer(text.substr(0, slash)),
                         parse_integer(text.substr(slash + 1)));
  }
  // decimal with optional exponent
  long exponent = 0;
  std::string_view mantissa = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(text.substr(e + 1)).get_si();
    mantissa = text.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    digits = std::string(mantissa.substr(0, dot));
    std::string frac(mantissa.substr(dot + 1));
    frac_digits = static_cast<long>(frac.size());
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+")
      throw DomainError("bad decimal literal: " + std::string(text));
  } else {
    digits = std::string(mantissa);
  }
  Rational q(parse_integer(digits));
  long shift = exponent - frac_digits;
  if (shift >= 0) {
    q *= pow10(shift);
  } else {
    q /= pow10(-shift);
  }
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) digits = 1;
  if (q == 0) return "0";
  Rational a = abs(q);
  // scale so that the integer part has exactly `digits` digits
  long exp10 = 0;
  while (a >= Rational(pow10(digits))) {
    a /= 10;
    ++exp10;
  }
  while (a < Rational(pow10(digits - 1))) {
    a *= 10;
    --exp10;
  }
  std::string body = floor(a).get_str();
  std::string out = q < 0 ? "-" : "";
  // place the decimal point: value = body * 10^exp10
  long int_len = static_cast<long>(body.size()) + exp10;
  if (int_len <= 0) {
    out += "0." + std::string(static_cast<std::size_t>(-int_len), '0') + body;
  } else if (int_len >= static_cast<long>(body.size())) {
    out += body + std::string(static_cast<std::size_t>(int_len - static_cast<long>(body.size())), '0');
    return out;
  } else {
    out += body.substr(0, static_cast<std::size_t>(int_len)) + "." +
           body.substr(static_cast<std::size_t>(int_len));
  }
  // trim trailing zeros of the fraction
  while (!out.empty() && out.back() == '0') out.pop_back();
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace fatflats
