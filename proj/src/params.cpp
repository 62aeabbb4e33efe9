#include "sepchi/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sepchi {

namespace {

double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
double dn(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

struct Interval {
  double lo, hi;
};

// ln(x) widened by a few ulps on both sides; libm is within 1 ulp.
Interval ln_interval(long long x) {
  const double v = std::log(static_cast<double>(x));
  double lo = v, hi = v;
  for (int i = 0; i < 4; ++i) {
    lo = dn(lo);
    hi = up(hi);
  }
  return {lo, hi};
}

Interval rational_interval(const Rational& r) {
  const double v = static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  return {dn(v), up(v)};
}

// 8 ln(delta) / delta. Multiplying by 8 is exact in binary floating point.
Interval spread_term(long long delta) {
  const Interval l = ln_interval(delta);
  return {dn(8.0 * l.lo / static_cast<double>(delta)),
          up(8.0 * l.hi / static_cast<double>(delta))};
}

// delta / ln(delta)
Interval density_floor(long long delta) {
  const Interval l = ln_interval(delta);
  return {dn(static_cast<double>(delta) / l.hi), up(static_cast<double>(delta) / l.lo)};
}

}  // namespace

bool delta_inequality_certified(long long delta, const Rational& eta) {
  // 1 - 8 ln(delta)/delta >= 1/(1+eta), worst-case rounding against us.
  const Interval q = spread_term(delta);
  const Interval rhs = rational_interval(Rational(1) / (Rational(1) + eta));
  return dn(1.0 - q.hi) >= rhs.hi;
}

bool delta_inequality_admissible(long long delta, const Rational& eta) {
  const Interval q = spread_term(delta);
  const Interval rhs = rational_interval(Rational(1) / (Rational(1) + eta));
  return up(1.0 - q.lo) >= rhs.lo;
}

bool k_inequalities_certified(long long k, long long delta, const Rational& eta) {
  if (eta * k < Rational(2 * delta)) return false;  // exact
  const Interval lhs = rational_interval((Rational(1) + eta) * k);
  return lhs.lo >= density_floor(delta).hi;
}

bool k_inequalities_admissible(long long k, long long delta, const Rational& eta) {
  if (eta * k < Rational(2 * delta)) return false;  // exact
  const Interval lhs = rational_interval((Rational(1) + eta) * k);
  return lhs.hi >= density_floor(delta).lo;
}

ParameterSet derive_parameters(const Rational& epsilon) {
  if (epsilon <= Rational(0)) throw std::invalid_argument("epsilon must be positive");

  ParameterSet ps;
  ps.epsilon = epsilon;
  ps.eta = epsilon / 2;

  // 8 ln(d)/d decreases for d >= 27, so the scan terminates at the minimal
  // certified delta.
  long long delta = 27;
  while (!delta_inequality_certified(delta, ps.eta)) ++delta;
  ps.delta = delta;

  long long k = ceil_rational(Rational(2 * delta) / ps.eta);
  while (!k_inequalities_certified(k, delta, ps.eta)) ++k;
  ps.k_min = k;

  ps.alpha = ceil_rational((Rational(1) + ps.eta) * k);
  ps.ell = (Rational(1) + epsilon) * k / 2;
  return ps;
}

bool parameter_set_valid(const ParameterSet& ps) {
  if (ps.epsilon <= Rational(0)) return false;
  if (ps.eta != ps.epsilon / 2) return false;
  if (ps.delta < 27) return false;
  if (!delta_inequality_admissible(ps.delta, ps.eta)) return false;
  if (!k_inequalities_admissible(ps.k_min, ps.delta, ps.eta)) return false;
  if (ps.alpha != ceil_rational((Rational(1) + ps.eta) * ps.k_min)) return false;
  if (static_cast<double>(ps.alpha) < density_floor(ps.delta).lo) return false;
  if (ps.ell != (Rational(1) + ps.epsilon) * ps.k_min / 2) return false;
  return true;
}

}  // namespace sepchi
