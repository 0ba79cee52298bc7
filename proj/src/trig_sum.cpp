#include "verlinde/trig_sum.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>

namespace verlinde {

namespace {

// RAII wrapper for a single mpfr value.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  ~Real() { mpfr_clear(x_); }
  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

 private:
  mpfr_t x_;
};

}  // namespace

std::vector<std::vector<long>> enumerate_lattice(int r, long khat) {
  std::vector<std::vector<long>> out;
  std::vector<long> gaps(r - 1, 1);
  std::vector<long> n(r, 0);
  auto emit = [&]() {
    // n_i = sum of gaps i..r-1; gaps positive keeps n strictly decreasing
    n[r - 1] = 0;
    for (int i = r - 2; i >= 0; --i) n[i] = n[i + 1] + gaps[i];
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if ((n[i] - n[j]) % khat == 0) return;
    out.push_back(n);
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r - 1) {
      emit();
      return;
    }
    for (long d = 1; d < khat; ++d) {
      gaps[pos] = d;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

long lattice_count(int r, long khat) {
  long c = 1;
  for (int i = 1; i < r; ++i) c *= khat - i;
  return c;
}

long default_precision() {
  if (const char* env = std::getenv("VERLINDE_PRECISION")) {
    char* end = nullptr;
    long p = std::strtol(env, &end, 10);
    if (end == env) return 256;
    if (p < 64) p = 64;
    if (p > 8192) p = 8192;
    return p;
  }
  return 256;
}

SumResult ver_sum(const ModuliInput& in, long precision) {
  check_input(in);
  if (!admissible(in.k, in.lam))
    throw std::invalid_argument("weight not admissible at this level");
  const long prec = precision > 0 ? precision : default_precision();
  const int r = in.r;
  const int g = in.g;
  const long khat = in.k + r;
  const int pole_order = 2 * g - 1;

  auto pts = enumerate_lattice(r, khat);
  if ((long)pts.size() != lattice_count(r, khat))
    throw std::logic_error("lattice enumeration does not match closed form");

  // lambda_hat components as rationals over the common denominator 2
  std::vector<Rational> hat(r);
  for (int i = 0; i < r; ++i) {
    Rational half(r - 1 - 2 * i, 2);
    half.canonicalize();
    hat[i] = Rational(in.lam.v[i]) + half;
  }

  // 2 sin(pi m / khat) for m = 1..khat-1
  std::vector<std::unique_ptr<Real>> sin_tab(khat);
  Real pi(prec), tmp(prec), angle(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (long m = 1; m < khat; ++m) {
    sin_tab[m] = std::make_unique<Real>(prec);
    mpfr_mul_si(angle.get(), pi.get(), m, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), khat, MPFR_RNDN);
    mpfr_sin(sin_tab[m]->get(), angle.get(), MPFR_RNDN);
    mpfr_mul_si(sin_tab[m]->get(), sin_tab[m]->get(), 2, MPFR_RNDN);
  }

  Real re_sum(prec), im_sum(prec), abs_sum(prec), denom(prec), mag(prec);
  Real c_val(prec), s_val(prec), t_f(prec);
  mpfr_set_zero(re_sum.get(), 1);
  mpfr_set_zero(im_sum.get(), 1);
  mpfr_set_zero(abs_sum.get(), 1);

  const long phase_quarters = (long)r * (r - 1) / 2;  // (-i)^{C(r,2)}

  for (const auto& n : pts) {
    // exact phase: lambda_hat . n / khat minus the constant quarter turns
    Rational t = 0;
    for (int i = 0; i < r; ++i) t += hat[i] * n[i];
    t /= khat;
    Rational quarter(phase_quarters, 4);
    quarter.canonicalize();
    t -= quarter;
    t = frac_part(t);

    int sign = 1;
    mpfr_set_si(denom.get(), 1, MPFR_RNDN);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        long m = n[i] - n[j];
        long fl = m / khat;
        long rem = m - fl * khat;
        if ((fl * pole_order) % 2 != 0) sign = -sign;
        mpfr_pow_si(tmp.get(), sin_tab[rem]->get(), pole_order, MPFR_RNDN);
        mpfr_mul(denom.get(), denom.get(), tmp.get(), MPFR_RNDN);
      }

    mpfr_si_div(mag.get(), sign, denom.get(), MPFR_RNDN);

    mpfr_set_q(t_f.get(), t.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(angle.get(), t_f.get(), pi.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), 2, MPFR_RNDN);
    mpfr_sin_cos(s_val.get(), c_val.get(), angle.get(), MPFR_RNDN);

    mpfr_fma(re_sum.get(), c_val.get(), mag.get(), re_sum.get(), MPFR_RNDN);
    mpfr_fma(im_sum.get(), s_val.get(), mag.get(), im_sum.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), mag.get(), MPFR_RNDN);
    mpfr_add(abs_sum.get(), abs_sum.get(), tmp.get(), MPFR_RNDN);
  }
  // prefactor r * (r * khat^{r-1})^{g-1}
  Integer pref =
      r * int_pow(Integer(Integer(r) * int_pow(Integer(khat), r - 1)), g - 1);
  Real pref_f(prec), value(prec), imag(prec), err(prec);
  mpfr_set_z(pref_f.get(), pref.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(value.get(), re_sum.get(), pref_f.get(), MPFR_RNDN);
  mpfr_mul(imag.get(), im_sum.get(), pref_f.get(), MPFR_RNDN);

  // certified bound: every term went through a bounded number of rounded
  // operations, each contributing relative error 2^-prec
  const long c_ops = 64L * ((long)r * r * pole_order + r + 8);
  mpfr_mul(err.get(), abs_sum.get(), pref_f.get(), MPFR_RNDN);
  mpfr_mul_si(err.get(), err.get(), c_ops, MPFR_RNDN);
  mpfr_mul_2si(err.get(), err.get(), -prec, MPFR_RNDN);
  mpfr_abs(err.get(), err.get(), MPFR_RNDN);

  Real nearest(prec), delta(prec);
  mpfr_rint(nearest.get(), value.get(), MPFR_RNDN);
  mpfr_sub(delta.get(), value.get(), nearest.get(), MPFR_RNDN);
  mpfr_abs(delta.get(), delta.get(), MPFR_RNDN);
  mpfr_add(delta.get(), delta.get(), err.get(), MPFR_RNDU);

  if (mpfr_cmp_d(delta.get(), 0.25) >= 0)
    throw std::runtime_error(
        "insufficient precision: trigonometric sum not certified at " +
        std::to_string(prec) + " bits");
  mpfr_abs(imag.get(), imag.get(), MPFR_RNDN);
  if (mpfr_cmp(imag.get(), err.get()) > 0)
    throw std::runtime_error(
        "insufficient precision: imaginary part above the error bound");

  SumResult out;
  out.precision = prec;
  out.error_bound = mpfr_get_d(err.get(), MPFR_RNDU);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), nearest.get(), MPFR_RNDN);
  out.value = z;
  return out;
}

}  // namespace verlinde
