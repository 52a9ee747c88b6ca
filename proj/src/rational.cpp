#include "tadpole/rational.hpp"

#include <algorithm>
#include <cctype>

#include "tadpole/error.hpp"

namespace tadpole {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::MalformedLine, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class p{std::string(num.front() == '+' ? num.substr(1) : num)};
  mpz_class q{std::string(den)};
  if (q == 0) throw Error(ErrorKind::MalformedLine, "zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_decimal(const Rational& r, int places) {
  mpz_class scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  // round half away from zero
  mpz_class scaled_num = r.get_num() * scale * 2 + (r >= 0 ? r.get_den() : mpz_class(-r.get_den()));
  mpz_class q = scaled_num / (r.get_den() * 2);
  const bool negative = q < 0;
  if (negative) q = -q;
  std::string digits = q.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return negative ? "-" + digits : digits;
}

}  // namespace tadpole
