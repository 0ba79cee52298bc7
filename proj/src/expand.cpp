#include "verlinde/expand.hpp"

#include <cstdlib>
#include <stdexcept>

namespace verlinde {

namespace {

// exp(form), all monomials with mu <= cap.
Series exp_series(const LinearForm& form, int nvars, long cap) {
  Series out = Series::one(nvars);
  if (form.is_zero() || cap < 0) return out;
  Series lin = Series::from_form(form);
  Series term = Series::one(nvars);
  for (long n = 1;; ++n) {
    term = mul_pruned(term, lin, cap);
    if (term.empty()) break;
    term.scale(Rational(1, (unsigned long)n));
    out += term;
  }
  return out;
}

// form / (e^form - 1) = sum B_n form^n / n!, monomials with mu <= cap.
Series bernoulli_series(const LinearForm& form, int nvars, long cap) {
  Series out = Series::one(nvars);
  Series lin = Series::from_form(form);
  Series pw = Series::one(nvars);
  Rational inv_fact = 1;
  for (long n = 1;; ++n) {
    pw = mul_pruned(pw, lin, cap);
    if (pw.empty()) break;
    inv_fact /= (long)n;
    Series term = pw;
    term.scale(bernoulli_number((int)n) * inv_fact);
    out += term;
  }
  return out;
}

// 1 / form for a lex-positive-or-negative nonzero form; monomials with
// mu <= cap. Geometric expansion around the leading variable.
Series inv_linear(const LinearForm& form, int nvars, long cap) {
  int j0 = form.lead_index();
  if (j0 < 0) throw std::domain_error("non-arrangement pole");
  const Rational& c0 = form.c[j0];
  ExpKey mono{};
  mono[j0] = -1;
  Series base = Series::monomial(nvars, mono, 1 / c0);
  LinearForm rest(nvars);
  for (int j = j0 + 1; j < nvars; ++j) rest.c[j] = form.c[j];
  Series out = base;
  if (rest.is_zero()) {
    prune(out, cap);
    return out;
  }
  // 1/form = base * sum_n (-rest * base)^n; acc stays at mu >= -weight(j0),
  // so step terms above cap + weight(j0) can never reach the kept range
  long w0 = var_weight(j0);
  Series step = mul_pruned(Series::from_form(rest.negated()), base, cap + w0);
  Series acc = base;
  prune(acc, cap);
  out = acc;
  while (true) {
    acc = mul_pruned(acc, step, cap);
    if (acc.empty()) break;
    out += acc;
  }
  return out;
}

// (1/form)^m, monomials with mu <= cap.
Series inv_linear_pow(const LinearForm& form, int m, int nvars, long cap) {
  long w = form.mu_valuation();
  Series single = inv_linear(form, nvars, cap + (long)(m - 1) * w);
  Series out = single;
  for (int i = 2; i <= m; ++i) {
    long cap_i = cap + (long)(m - i) * w;
    out = mul_pruned(out, single, cap_i);
  }
  return out;
}

// (2 sinh(form/2) / form)^(-m) = (1 + t)^(-m) with
// t = sum_{i>=1} form^{2i} / (4^i (2i+1)!); monomials with mu <= cap.
Series sinh_ratio_inv_pow(const LinearForm& form, int m, int nvars, long cap) {
  Series lin = Series::from_form(form);
  Series sq = mul_pruned(lin, lin, cap);
  Series t(nvars);
  Series pw = Series::one(nvars);
  Rational coeff = 1;
  for (long i = 1;; ++i) {
    pw = mul_pruned(pw, sq, cap);
    if (pw.empty()) break;
    coeff /= Rational(4 * (2 * i) * (2 * i + 1));
    Series term = pw;
    term.scale(coeff);
    t += term;
  }
  Series out = Series::one(nvars);
  Series tp = Series::one(nvars);
  for (long n = 1;; ++n) {
    tp = mul_pruned(tp, t, cap);
    if (tp.empty()) break;
    // C(-m, n) = (-1)^n C(m+n-1, n)
    Rational b = Rational(binomial(m + n - 1, n));
    if (n % 2 == 1) b = -b;
    Series term = tp;
    term.scale(b);
    out += term;
  }
  return out;
}

}  // namespace

long factor_mu_valuation(const YFactor& f) {
  switch (f.kind) {
    case FactorKind::ExpForm:
      return 0;
    case FactorKind::InvOneMinusExp: {
      if (f.form.is_zero()) throw std::domain_error("non-arrangement pole");
      return -f.form.mu_valuation();
    }
    case FactorKind::InvTwoSinhHalf: {
      if (f.form.is_zero()) throw std::domain_error("non-arrangement pole");
      return -(long)f.mult * f.form.mu_valuation();
    }
    case FactorKind::MonomialPower: {
      if (f.form.is_zero()) throw std::domain_error("non-arrangement pole");
      return (long)f.mult * f.form.mu_valuation();
    }
  }
  throw std::logic_error("unknown factor kind");
}

Series expand_factor(const YFactor& f, long trunc) {
  int nvars = f.form.nvars();
  long cap = factor_mu_valuation(f) + trunc;
  switch (f.kind) {
    case FactorKind::ExpForm:
      return exp_series(f.form, nvars, cap);
    case FactorKind::InvOneMinusExp: {
      if (f.form.lex_sign() > 0) {
        // 1/(1-e^l) = -(1/l) * l/(e^l - 1)
        long w = f.form.mu_valuation();
        Series a = inv_linear(f.form, nvars, cap);
        Series b = bernoulli_series(f.form, nvars, cap + w);
        Series out = mul_pruned(a, b, cap);
        out.scale(-1);
        return out;
      }
      // 1/(1-e^l) = 1 - 1/(1-e^{-l}) for lex-negative l
      YFactor flipped{FactorKind::InvOneMinusExp, f.form.negated(), 1};
      Series out = Series::one(nvars);
      out -= expand_factor(flipped, trunc);
      return out;
    }
    case FactorKind::InvTwoSinhHalf: {
      LinearForm form = f.form;
      bool flip = false;
      if (form.lex_sign() < 0) {
        form = form.negated();
        flip = (f.mult % 2) != 0;
      }
      long w = form.mu_valuation();
      Series a = inv_linear_pow(form, f.mult, nvars, cap);
      Series b = sinh_ratio_inv_pow(form, f.mult, nvars, cap + (long)f.mult * w);
      Series out = mul_pruned(a, b, cap);
      if (flip) out.scale(-1);
      return out;
    }
    case FactorKind::MonomialPower: {
      int j = f.form.lead_index();
      for (int t = j + 1; t < nvars; ++t)
        if (f.form.c[t] != 0)
          throw std::invalid_argument("monomial factor must be one variable");
      ExpKey key{};
      key[j] = f.mult;
      Rational coef = 1;
      const Rational& c0 = f.form.c[j];
      for (int t = 0; t < std::abs(f.mult); ++t) {
        if (f.mult > 0)
          coef *= c0;
        else
          coef /= c0;
      }
      return Series::monomial(nvars, key, coef);
    }
  }
  throw std::logic_error("unknown factor kind");
}

Rational iterated_residue(const std::vector<YFactor>& factors, int nvars,
                          const Rational& scalar, long trunc_extra) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("iterated_residue: bad variable count");
  long vals = 0;
  for (const auto& f : factors) vals += factor_mu_valuation(f);
  const long target_mu = -((1L << nvars) - 1);
  const long budget = target_mu - vals;
  if (budget < 0) return 0;
  const long excess = budget + trunc_extra;

  std::vector<long> suffix(factors.size() + 1, 0);
  for (size_t i = factors.size(); i-- > 0;)
    suffix[i] = suffix[i + 1] + factor_mu_valuation(factors[i]);

  Series prod = Series::one(nvars);
  for (size_t i = 0; i < factors.size(); ++i) {
    Series fi = expand_factor(factors[i], excess);
    long cap = target_mu + trunc_extra - suffix[i + 1];
    prod = mul_pruned(prod, fi, cap);
    if (prod.empty()) return 0;
  }
  return prod.coeff(residue_key(nvars)) * scalar;
}

}  // namespace verlinde
