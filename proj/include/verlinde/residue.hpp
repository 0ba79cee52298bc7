#pragma once

#include "verlinde/bases.hpp"
#include "verlinde/expand.hpp"
#include "verlinde/weights.hpp"

#include <set>
#include <vector>

namespace verlinde {

/// One moduli problem: rank, genus, level, parabolic weight.
struct ModuliInput {
  int r = 2;
  int g = 1;
  long k = 1;
  IntegralWeight lam;
};

/// Validates rank/genus/level ranges and that the weight sums to zero.
/// Admissibility is not required here: the evaluators stay defined at weights
/// outside the admissible box, and the symmetry checks use that.
void check_input(const ModuliInput& in);

/// Multiplicative x-space expression: scalar * e^{<exp_form, x>} * product of
/// pole factors. All forms are sum-zero coefficient vectors on x_1..x_r.
enum class XFactorKind { InvOneMinusExp, InvTwoSinhHalf };

struct XFactor {
  XFactorKind kind;
  WeightVector form;
  int mult = 1;  // power for InvTwoSinhHalf
};

struct FactorExpr {
  int r = 0;
  Rational scalar = 1;
  WeightVector exp_form;  // dimension 0 means no exponential part
  std::vector<XFactor> factors;
};

/// prod_{i<j} (2 sinh((x_i - x_j)/(2 khat)))^{-(2g-1)}.
FactorExpr weyl_denominator(int r, int g, long khat);

/// Normalization (-1)^{C(r,2)(g-1)} * r * (r * khat^{r-1})^{g-1}.
Rational n_tilde(int r, int g, long k);

/// Iterated residue of f * e^{<a,x>} * prod_j 1/(1 - e^{y_j}) in the
/// y-coordinates of the full basis (y_1 = first root, outermost). Kernel
/// factors at the 0-based positions in skip_kernels are left out.
Rational iber(const OrderedBasis& B, const FactorExpr& f, const WeightVector& a,
              const std::set<int>& skip_kernels = {});

/// sum over the family of iber_B[f](a - [c]_B).
Rational bernoulli_functional(const std::vector<OrderedBasis>& D,
                              const FactorExpr& f, const WeightVector& a,
                              const WeightVector& c);

/// Core evaluator at a regular anchor c; the chamber enters only through the
/// lattice shifts [c]_B.
Rational p_anchor(const ModuliInput& in, const WeightVector& c,
                  const std::vector<OrderedBasis>& D);

/// Chamber point validated to be regular and interior to the simplex.
struct ChamberSpec {
  WeightVector point;
};

ChamberSpec make_chamber(const WeightVector& c);

Rational p_chamber(const ModuliInput& in, const ChamberSpec& c,
                   const std::vector<OrderedBasis>& D);

/// Residue-route Verlinde number: p at the resolved chamber of the target
/// point (lambda_hat/k_hat by default).
Rational ver_residue(const ModuliInput& in, const std::vector<OrderedBasis>& D,
                     ChamberTarget target = ChamberTarget::Hat);

/// p(c_plus) - p(c_minus) for chambers adjacent across the wall. The pair is
/// validated to straddle exactly this wall, positive side first.
Rational wallcross_full(const ModuliInput& in, const Wall& w,
                        const WeightVector& c_plus,
                        const WeightVector& c_minus,
                        const std::vector<OrderedBasis>& D);

/// Factorized crossing term: composed link-first bases built from diagonal
/// families on the wall's two blocks, with the link kernel omitted.
Rational wallcross_reduced(const ModuliInput& in, const Wall& w,
                           const WeightVector& c_plus);

/// Shared evaluator knobs. trunc_extra widens every series cap (results must
/// not change, by exactness); flip_sign negates the first basis contribution
/// in p_anchor, a hook for exercising the failure paths of the cross checks.
struct ResidueSettings {
  long trunc_extra = 0;
  bool flip_sign = false;
};

ResidueSettings& residue_settings();

/// Family used when no explicit choice is made: paths started at vertex 1.
std::vector<OrderedBasis> default_family(int r);

}  // namespace verlinde
