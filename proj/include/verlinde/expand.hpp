#pragma once

#include "verlinde/series.hpp"

#include <vector>

namespace verlinde {

enum class FactorKind {
  ExpForm,         // e^(form)
  InvOneMinusExp,  // 1 / (1 - e^(form))
  InvTwoSinhHalf,  // (2 sinh(form / 2))^(-mult)
  MonomialPower,   // (c * y_lead)^mult for a single-variable form c * y_lead
};

struct YFactor {
  FactorKind kind;
  LinearForm form;
  int mult = 1;  // used by InvTwoSinhHalf and MonomialPower
};

/// mu of the factor's leading series term: 0 for entire factors,
/// -weight(lead) for 1/(1-e^l), -mult*weight(lead) for sinh powers.
/// Throws std::domain_error("non-arrangement pole") when a pole factor has
/// the zero form.
long factor_mu_valuation(const YFactor& f);

/// Complete expansion of the factor through mu-excess `trunc` above its
/// mu-valuation: every true series monomial with mu <= valuation + trunc is
/// present with its exact coefficient.
Series expand_factor(const YFactor& f, long trunc);

/// Coefficient of y_1^{-1}...y_n^{-1} in scalar * prod(factors).
/// Exact for every trunc_extra >= 0: the mu-grading argument bounds the
/// excess any contributing factor monomial can carry by
/// mu(target) - sum of factor valuations.
Rational iterated_residue(const std::vector<YFactor>& factors, int nvars,
                          const Rational& scalar, long trunc_extra = 0);

}  // namespace verlinde
