#include "sepchi/rational.hpp"

#include <cstdlib>

namespace sepchi {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return Rational(p);
    }
    const long long p = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("");
    const std::string den = text.substr(slash + 1);
    const long long q = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument("");
    return make_rational(p, q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: '" + text + "'");
  }
}

long long floor_rational(const Rational& r) {
  const long long p = r.numerator();
  const long long q = r.denominator();  // boost keeps q > 0
  long long d = p / q;
  if (p % q != 0 && p < 0) --d;
  return d;
}

long long ceil_rational(const Rational& r) {
  const long long p = r.numerator();
  const long long q = r.denominator();
  long long d = p / q;
  if (p % q != 0 && p > 0) ++d;
  return d;
}

}  // namespace sepchi
