#pragma once

#include "verlinde/residue.hpp"

#include <vector>

namespace verlinde {

/// Affine Weyl element: a permutation (1-based image array, index i maps to
/// sigma[i-1]) together with a sum-zero integral translation.
struct AffineWeylElement {
  std::vector<int> sigma;
  IntegralWeight gamma;
};

/// (-1)^{number of inversions}.
int permutation_sign(const std::vector<int>& sigma);

/// Scaled-picture action a |-> sigma(a) + gamma, used on anchor points and
/// hat points (where translations are by the root lattice itself).
WeightVector affine_act(const AffineWeylElement& e, const WeightVector& a);

/// Dot action on weights: sigma(lam + rho) - rho + (k + r) gamma.
IntegralWeight affine_act_dot(const AffineWeylElement& e, long k,
                              const IntegralWeight& lam);

/// Regular anchor outside the simplex: side +1 gives (1/r,...,1/r) - e_r,
/// side -1 gives e_1 - (1/r,...,1/r).
WeightVector theta_point(int r, int side);

/// Reflections fixing the side anchor under the scaled action: the simple
/// transpositions away from the moved coordinate, plus one affine reflection.
std::vector<AffineWeylElement> stabilizer_generators(int r, int side);

/// Evaluator anchored at theta_side. A polynomial in the weight that changes
/// sign under the dot action of each stabilizer generator.
Rational p_theta(const ModuliInput& in, int side,
                 const std::vector<OrderedBasis>& D);

/// Degree-weight pair for the twisting shift: sum(lam) = k * d, entries not
/// normalized to sum zero.
struct DegreeWeight {
  long d = 0;
  std::vector<long> lam;
};

/// Rotation by m: the first m entries move to the end lowered by k, and the
/// degree drops by m. Composition-consistent: shifts by m1 then m2 equal the
/// shift by m1 + m2.
DegreeWeight hecke_shift(long k, const DegreeWeight& in, int m);

/// Rank-2 genus-g two-point evaluation on one side of its wall
/// (side > 0 or side < 0), as an exact rational.
Rational h_tilde(long k, long lam, long mu, int g, int side);

}  // namespace verlinde
