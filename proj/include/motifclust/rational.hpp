#ifndef MOTIFCLUST_RATIONAL_HPP
#define MOTIFCLUST_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace motifclust {

// Non-negative exact rational. Kept reduced with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
};

// Accepts decimal text ("0.06") or "p/q" ("6/100"); both yield the same
// reduced rational. Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace motifclust

#endif
