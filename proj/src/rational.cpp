#include "motifclust/rational.hpp"

#include <charconv>
#include <numeric>

#include "motifclust/errors.hpp"

namespace motifclust {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d <= 0 || n < 0) throw InvalidInputError("rational must be non-negative with positive denominator");
  std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

bool Rational::operator<=(const Rational& o) const {
  return static_cast<__int128>(num) * o.den <= static_cast<__int128>(o.num) * den;
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_digits(const std::string& s, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError(std::string("malformed ") + what + ": '" + s + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t p = parse_digits(text.substr(0, slash), "rational numerator");
    std::int64_t q = parse_digits(text.substr(slash + 1), "rational denominator");
    if (q == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(p, q);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    return Rational(parse_digits(text, "number"), 1);
  }
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.size() > 17) throw ParseError("too many decimal digits in '" + text + "'");
  std::int64_t w = whole.empty() ? 0 : parse_digits(whole, "number");
  std::int64_t f = frac.empty() ? 0 : parse_digits(frac, "number");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rational(w * scale + f, scale);
}

}  // namespace motifclust
