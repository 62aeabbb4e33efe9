#pragma once

#include "sepchi/rational.hpp"

namespace sepchi {

// The derived parameter chain epsilon -> (eta, delta, k_min, alpha, ell).
// delta and k_min are the minimal values satisfying their defining
// inequalities, which makes the output canonical and testable.
struct ParameterSet {
  Rational epsilon;  // > 0
  Rational eta;      // epsilon / 2
  long long delta = 0;  // minimal integer >= 27 with 1 - 8 ln(delta)/delta >= 1/(1+eta)
  long long k_min = 0;  // minimal k with eta k >= 2 delta and (1+eta) k >= delta/ln(delta)
  long long alpha = 0;  // ceil((1+eta) * k_min)
  Rational ell;      // (1+epsilon) * k_min / 2
};

ParameterSet derive_parameters(const Rational& epsilon);

// The two transcendental inequalities are evaluated with directed rounding
// (interval-widened doubles). "certified" means the inequality holds under
// worst-case rounding; "admissible" means it is not certainly violated, so a
// true inequality is never falsely rejected.
bool delta_inequality_certified(long long delta, const Rational& eta);
bool delta_inequality_admissible(long long delta, const Rational& eta);
bool k_inequalities_certified(long long k, long long delta, const Rational& eta);
bool k_inequalities_admissible(long long k, long long delta, const Rational& eta);

// Re-verification of a ParameterSet: the three defining inequalities in
// admissible mode plus the structural identities (eta, alpha, ell).
bool parameter_set_valid(const ParameterSet& ps);

}  // namespace sepchi
