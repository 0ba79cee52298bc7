#include "verlinde/residue.hpp"

#include <stdexcept>

namespace verlinde {

namespace {

LinearForm form_in_basis(const WeightVector& xform, const OrderedBasis& B) {
  auto t = coords_in_basis(xform, B);
  LinearForm lf((int)t.size());
  lf.c = t;
  return lf;
}

bool wv_is_zero(const WeightVector& a) {
  for (const auto& x : a.v)
    if (x != 0) return false;
  return true;
}

long wall_floor(const WeightVector& c, const Partition& p) {
  Rational phi = partition_functional(c, p);
  if (is_integer(phi)) throw std::invalid_argument("point on a wall");
  return rat_floor(phi).get_si();
}

}  // namespace

/// Range checks only: the polynomial evaluators stay defined at weights
// outside the admissible box (reflection images land there).
void check_input(const ModuliInput& in) {
  if (in.r < 2 || in.r > kMaxVars + 1)
    throw std::invalid_argument("rank out of supported range");
  if (in.g < 1) throw std::invalid_argument("genus must be at least 1");
  if (in.k < 1) throw std::invalid_argument("level must be positive");
  if (in.lam.r() != in.r)
    throw std::invalid_argument("weight length must equal the rank");
  long sum = 0;
  for (long x : in.lam.v) sum += x;
  if (sum != 0)
    throw std::invalid_argument("weight coordinates must sum to zero");
}

FactorExpr weyl_denominator(int r, int g, long khat) {
  FactorExpr f;
  f.r = r;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      WeightVector form(r);
      form.v[i - 1] = Rational(1, khat);
      form.v[j - 1] = Rational(-1, khat);
      f.factors.push_back(XFactor{XFactorKind::InvTwoSinhHalf, form, 2 * g - 1});
    }
  return f;
}

Rational n_tilde(int r, int g, long k) {
  Integer khat = k + r;
  Integer base = r * int_pow(khat, (unsigned long)(r - 1));
  Integer val = r * int_pow(base, (unsigned long)(g - 1));
  long choose2 = (long)r * (r - 1) / 2;
  bool negative = (choose2 % 2 != 0) && (g % 2 == 0);
  if (negative) val = -val;
  return Rational(val);
}

Rational iber(const OrderedBasis& B, const FactorExpr& f, const WeightVector& a,
              const std::set<int>& skip_kernels) {
  if (B.r != f.r) throw std::invalid_argument("rank mismatch");
  if (!B.full()) throw std::invalid_argument("iber needs a full basis");
  int n = B.size();

  std::vector<YFactor> yf;
  for (int j = 0; j < n; ++j) {
    if (skip_kernels.count(j)) continue;
    LinearForm unit(n);
    unit.c[j] = 1;
    yf.push_back(YFactor{FactorKind::InvOneMinusExp, unit, 1});
  }
  for (const auto& xf : f.factors) {
    FactorKind kind = xf.kind == XFactorKind::InvOneMinusExp
                          ? FactorKind::InvOneMinusExp
                          : FactorKind::InvTwoSinhHalf;
    yf.push_back(YFactor{kind, form_in_basis(xf.form, B), xf.mult});
  }
  WeightVector expx = a;
  if (f.exp_form.r() == f.r) expx = wv_add(expx, f.exp_form);
  if (!wv_is_zero(expx))
    yf.push_back(YFactor{FactorKind::ExpForm, form_in_basis(expx, B), 1});

  return iterated_residue(yf, n, f.scalar, residue_settings().trunc_extra);
}

Rational bernoulli_functional(const std::vector<OrderedBasis>& D,
                              const FactorExpr& f, const WeightVector& a,
                              const WeightVector& c) {
  Rational total = 0;
  bool first = true;
  for (const auto& B : D) {
    Rational term = iber(B, f, wv_sub(a, integer_part(c, B)));
    if (first && residue_settings().flip_sign) term = -term;
    first = false;
    total += term;
  }
  return total;
}

Rational p_anchor(const ModuliInput& in, const WeightVector& c,
                  const std::vector<OrderedBasis>& D) {
  check_input(in);
  FactorExpr w = weyl_denominator(in.r, in.g, in.k + in.r);
  WeightVector hat = hat_point(in.k, in.lam);
  return n_tilde(in.r, in.g, in.k) * bernoulli_functional(D, w, hat, c);
}

ChamberSpec make_chamber(const WeightVector& c) {
  if (!is_regular(c) || !in_simplex(c))
    throw std::invalid_argument("chamber point must be regular and interior");
  return ChamberSpec{c};
}

Rational p_chamber(const ModuliInput& in, const ChamberSpec& c,
                   const std::vector<OrderedBasis>& D) {
  return p_anchor(in, c.point, D);
}

Rational ver_residue(const ModuliInput& in, const std::vector<OrderedBasis>& D,
                     ChamberTarget target) {
  check_input(in);
  WeightVector c = resolve_chamber(in.k, in.lam, target);
  return p_anchor(in, c, D);
}

Rational wallcross_full(const ModuliInput& in, const Wall& w,
                        const WeightVector& c_plus,
                        const WeightVector& c_minus,
                        const std::vector<OrderedBasis>& D) {
  auto between = wall_between(c_plus, c_minus);
  if (!between || !(between->part == w.part) || between->level != w.level)
    throw std::invalid_argument("points are not adjacent across this wall");
  if (wall_floor(c_plus, w.part) != w.level)
    throw std::invalid_argument("positive-side point must come first");
  return p_anchor(in, c_plus, D) - p_anchor(in, c_minus, D);
}

Rational wallcross_reduced(const ModuliInput& in, const Wall& w,
                           const WeightVector& c_plus) {
  check_input(in);
  if (wall_floor(c_plus, w.part) != w.level)
    throw std::invalid_argument("anchor must lie on the wall's positive side");
  WallBases wb = wall_bases(w.part);
  FactorExpr f = weyl_denominator(in.r, in.g, in.k + in.r);
  WeightVector hat = hat_point(in.k, in.lam);
  Rational total = 0;
  for (const auto& L : wb.left)
    for (const auto& R : wb.right) {
      OrderedBasis comp = compose_wall_basis(in.r, wb.link, L, R);
      WeightVector anchor = wv_sub(hat, integer_part(c_plus, comp));
      total += iber(comp, f, anchor, {0});
    }
  return n_tilde(in.r, in.g, in.k) * total;
}

ResidueSettings& residue_settings() {
  static ResidueSettings s;
  return s;
}

std::vector<OrderedBasis> default_family(int r) {
  return hamiltonian_family(r, 1);
}

}  // namespace verlinde
