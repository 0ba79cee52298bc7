#pragma once

// Independent reference computations used as test oracles.  These deliberately
// avoid the code paths under test: the trigonometric oracles work in plain
// double complex arithmetic with raw angles (no folding, no sign tables), and
// the rank-3 chamber polynomials are hand-transcribed two-variable residues.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "verlinde/expand.hpp"
#include "verlinde/rational.hpp"
#include "verlinde/series.hpp"
#include "verlinde/weights.hpp"

namespace verlinde::oracles {

inline double dpow(double base, int e) {
  double v = 1.0;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

inline long long round_checked(double val) {
  double nearest = std::nearbyint(val);
  if (std::fabs(val - nearest) > 1e-6)
    throw std::runtime_error("oracle value is not close to an integer");
  return (long long)nearest;
}

// Classical rank-2 closed form (k+2 shifted level, weight (a, -a)).
inline long long su2_verlinde(long k, long a, int g) {
  long kh = k + 2;
  const double pi = std::acos(-1.0);
  double acc = 0.0;
  for (long n = 1; n < kh; ++n) {
    double s = std::sin(pi * (double)n / (double)kh);
    acc += std::sin(pi * (double)((2 * a + 1) * n) / (double)kh) /
           dpow(s, 2 * g - 1);
  }
  return round_checked(dpow((double)kh / 2.0, g - 1) * acc);
}

// Rank-3 closed form folded onto a single simplex 0 < b < a < k+3 of
// (k_hat-1)(k_hat-2)/2 points, purely real arithmetic.
inline long long su3_trig(long k, long l1, long l2, int g) {
  long kh = k + 3;
  const double pi = std::acos(-1.0);
  double acc = 0.0;
  for (long a = 2; a < kh; ++a) {
    for (long b = 1; b < a; ++b) {
      double theta = 2 * pi * (double)((l1 + 1) * a + l2 * b) / (double)kh;
      double den = dpow(8.0 * std::sin(pi * (double)(a - b) / (double)kh) *
                            std::sin(pi * (double)a / (double)kh) *
                            std::sin(pi * (double)b / (double)kh),
                        2 * g - 1);
      acc += std::sin(theta) / den;
    }
  }
  double pref = 3.0 * dpow(3.0 * (double)kh * (double)kh, g - 1);
  return round_checked(-2.0 * pref * acc);
}

// Shared two-variable residue: variable 0 is the outer one.  Kernel in the
// inner variable always present, kernel in the outer one optional.
inline Rational r3_residue(long khat, const Rational& ey, const Rational& ex,
                           int g, bool include_outer_kernel) {
  std::vector<YFactor> fs;
  LinearForm e(2);
  e.c[0] = ey;
  e.c[1] = ex;
  if (!e.is_zero()) fs.push_back({FactorKind::ExpForm, e, 1});
  LinearForm kx(2);
  kx.c[1] = khat;
  fs.push_back({FactorKind::InvOneMinusExp, kx, 1});
  if (include_outer_kernel) {
    LinearForm ky(2);
    ky.c[0] = khat;
    fs.push_back({FactorKind::InvOneMinusExp, ky, 1});
  }
  LinearForm sy(2), sx(2), sxy(2);
  sy.c[0] = 1;
  sx.c[1] = 1;
  sxy.c[0] = 1;
  sxy.c[1] = 1;
  fs.push_back({FactorKind::InvTwoSinhHalf, sx, 2 * g - 1});
  fs.push_back({FactorKind::InvTwoSinhHalf, sy, 2 * g - 1});
  fs.push_back({FactorKind::InvTwoSinhHalf, sxy, 2 * g - 1});
  return iterated_residue(fs, 2, Rational(1), 0);
}

// Chamber polynomial on the side where the middle-coordinate functional is
// positive, evaluated from the hand-transcribed residue pair.
inline Rational r3_chamber_gt(long k, const std::vector<long>& lam, int g) {
  long kh = k + 3;
  Rational a = r3_residue(kh, Rational(lam[0] + lam[1] + 1),
                          Rational(lam[0] + 1), g, true);
  Rational bp = r3_residue(kh, Rational(lam[0] + lam[2] + kh),
                           Rational(lam[0] + 1), g, true);
  Rational pref = int_pow(Rational(3 * kh * kh), g);
  Rational v = pref * (a - bp);
  return (g % 2 == 0) ? -v : v;
}

inline Rational r3_chamber_lt(long k, const std::vector<long>& lam, int g) {
  long kh = k + 3;
  Rational a = r3_residue(kh, Rational(lam[0] + lam[1] + 1),
                          Rational(lam[0] + 1), g, true);
  Rational b = r3_residue(kh, Rational(lam[0] + lam[2]),
                          Rational(lam[0] + 1), g, true);
  Rational pref = int_pow(Rational(3 * kh * kh), g);
  Rational v = pref * (a - b);
  return (g % 2 == 0) ? -v : v;
}

// Jump lt - gt across the middle wall as a single one-kernel residue.
inline Rational r3_jump(long k, const std::vector<long>& lam, int g) {
  long kh = k + 3;
  Rational v = r3_residue(kh, Rational(lam[0] + lam[2]),
                          Rational(lam[0] + 1), g, false);
  return int_pow(Rational(-3 * kh * kh), g) * v;
}

// Frozen regular anchor pair across the middle wall of the rank-3 simplex.
inline WeightVector anchor_plus() {
  WeightVector c;
  c.v = {Rational(1, 10), Rational(1, 20), Rational(-3, 20)};
  return c;
}

inline WeightVector anchor_minus() {
  WeightVector c;
  c.v = {Rational(3, 20), Rational(-1, 20), Rational(-1, 10)};
  return c;
}

}  // namespace verlinde::oracles
