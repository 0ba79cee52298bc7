#include "verlinde/symmetry.hpp"

#include <stdexcept>

namespace verlinde {

namespace {

void check_permutation(const std::vector<int>& sigma) {
  int n = (int)sigma.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

}  // namespace

int permutation_sign(const std::vector<int>& sigma) {
  check_permutation(sigma);
  int inv = 0;
  for (size_t i = 0; i < sigma.size(); ++i)
    for (size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

WeightVector affine_act(const AffineWeylElement& e, const WeightVector& a) {
  int r = a.r();
  if ((int)e.sigma.size() != r || e.gamma.r() != r)
    throw std::invalid_argument("rank mismatch");
  check_permutation(e.sigma);
  WeightVector out(r);
  for (int i = 0; i < r; ++i) out.v[e.sigma[i] - 1] = a.v[i];
  for (int i = 0; i < r; ++i) out.v[i] += e.gamma.v[i];
  return out;
}

IntegralWeight affine_act_dot(const AffineWeylElement& e, long k,
                              const IntegralWeight& lam) {
  int r = lam.r();
  WeightVector hat = wv_add(wv_from_integral(lam), rho(r));
  WeightVector moved(r);
  check_permutation(e.sigma);
  if ((int)e.sigma.size() != r || e.gamma.r() != r)
    throw std::invalid_argument("rank mismatch");
  for (int i = 0; i < r; ++i) moved.v[e.sigma[i] - 1] = hat.v[i];
  moved = wv_sub(moved, rho(r));
  IntegralWeight out(r);
  for (int i = 0; i < r; ++i) {
    Rational x = moved.v[i];
    if (!is_integer(x)) throw std::logic_error("dot action left the lattice");
    out.v[i] = rat_floor(x).get_si() + (k + r) * e.gamma.v[i];
  }
  return out;
}

WeightVector theta_point(int r, int side) {
  if (side != 1 && side != -1) throw std::invalid_argument("side must be +-1");
  WeightVector out(r);
  for (int i = 0; i < r; ++i) out.v[i] = Rational(side, r);
  if (side > 0)
    out.v[r - 1] -= 1;
  else
    out.v[0] += 1;
  return out;
}

std::vector<AffineWeylElement> stabilizer_generators(int r, int side) {
  WeightVector theta = theta_point(r, side);
  std::vector<AffineWeylElement> out;
  auto transposition = [r](int a, int b) {
    std::vector<int> s(r);
    for (int i = 0; i < r; ++i) s[i] = i + 1;
    std::swap(s[a - 1], s[b - 1]);
    return s;
  };
  auto add = [&](int a, int b, bool translate) {
    AffineWeylElement e;
    e.sigma = transposition(a, b);
    e.gamma = IntegralWeight(r);
    if (translate) {
      e.gamma.v[a - 1] = 1;
      e.gamma.v[b - 1] = -1;
    }
    if (!wv_equal(affine_act(e, theta), theta))
      throw std::logic_error("generator does not fix the anchor");
    out.push_back(e);
  };
  if (side > 0) {
    for (int i = 1; i <= r - 2; ++i) add(i, i + 1, false);
    add(r - 1, r, true);
  } else {
    for (int i = 2; i <= r - 1; ++i) add(i, i + 1, false);
    add(1, 2, true);
  }
  return out;
}

Rational p_theta(const ModuliInput& in, int side,
                 const std::vector<OrderedBasis>& D) {
  return p_anchor(in, theta_point(in.r, side), D);
}

DegreeWeight hecke_shift(long k, const DegreeWeight& in, int m) {
  int r = (int)in.lam.size();
  if (m < 0 || m > r) throw std::invalid_argument("shift out of range");
  long sum = 0;
  for (long x : in.lam) sum += x;
  if (sum != k * in.d)
    throw std::invalid_argument("weight sum must equal level times degree");
  DegreeWeight out;
  out.d = in.d - m;
  for (int i = m; i < r; ++i) out.lam.push_back(in.lam[i]);
  for (int i = 0; i < m; ++i) out.lam.push_back(in.lam[i] - k);
  return out;
}

Rational h_tilde(long k, long lam, long mu, int g, int side) {
  if (k < 1 || g < 1) throw std::invalid_argument("bad level or genus");
  if (side == 0) throw std::invalid_argument("side must be nonzero");
  auto res_at = [&](long c) {
    std::vector<YFactor> f;
    LinearForm u(1);
    u.c[0] = 1;
    f.push_back(YFactor{FactorKind::InvTwoSinhHalf, u, 2 * g});
    LinearForm ker(1);
    ker.c[0] = k + 2;
    f.push_back(YFactor{FactorKind::InvOneMinusExp, ker, 1});
    if (c != 0) {
      LinearForm ex(1);
      ex.c[0] = c;
      f.push_back(YFactor{FactorKind::ExpForm, ex, 1});
    }
    return iterated_residue(f, 1, 1, residue_settings().trunc_extra);
  };
  long c2 = side > 0 ? lam - mu : lam - mu + k + 2;
  Rational out = Rational(int_pow(Integer(2 * k + 4), (unsigned long)g)) *
                 (res_at(lam + mu + 1) - res_at(c2));
  if (g % 2 == 0) out = -out;
  return out;
}

}  // namespace verlinde
