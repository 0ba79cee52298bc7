#include "verlinde/series.hpp"

#include <stdexcept>

namespace verlinde {

long mu_weight(const ExpKey& e, int nvars) {
  long mu = 0;
  for (int j = 0; j < nvars; ++j) mu += (long)e[j] * var_weight(j);
  return mu;
}

ExpKey key_add(const ExpKey& a, const ExpKey& b) {
  ExpKey out{};
  for (int j = 0; j < kMaxVars; ++j) out[j] = a[j] + b[j];
  return out;
}

ExpKey residue_key(int nvars) {
  ExpKey out{};
  for (int j = 0; j < nvars; ++j) out[j] = -1;
  return out;
}

bool LinearForm::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

int LinearForm::lead_index() const {
  for (int j = 0; j < nvars(); ++j)
    if (c[j] != 0) return j;
  return -1;
}

int LinearForm::lex_sign() const {
  int j = lead_index();
  if (j < 0) return 0;
  return sgn(c[j]);
}

LinearForm LinearForm::negated() const {
  LinearForm out(nvars());
  for (int j = 0; j < nvars(); ++j) out.c[j] = -c[j];
  return out;
}

LinearForm LinearForm::scaled(const Rational& s) const {
  LinearForm out(nvars());
  for (int j = 0; j < nvars(); ++j) out.c[j] = c[j] * s;
  return out;
}

long LinearForm::mu_valuation() const {
  int j = lead_index();
  if (j < 0) throw std::domain_error("mu_valuation of zero form");
  return var_weight(j);
}

Series Series::one(int n) {
  Series s(n);
  s.terms.emplace(ExpKey{}, Rational(1));
  return s;
}

Series Series::monomial(int n, const ExpKey& e, const Rational& coeff) {
  Series s(n);
  if (coeff != 0) s.terms.emplace(e, coeff);
  return s;
}

Series Series::from_form(const LinearForm& f) {
  Series s(f.nvars());
  for (int j = 0; j < f.nvars(); ++j) {
    if (f.c[j] == 0) continue;
    ExpKey e{};
    e[j] = 1;
    s.terms.emplace(e, f.c[j]);
  }
  return s;
}

void Series::add_term(const ExpKey& e, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Series& Series::operator+=(const Series& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

void Series::scale(const Rational& s) {
  if (s == 0) {
    terms.clear();
    return;
  }
  for (auto& [e, c] : terms) c *= s;
}

Rational Series::coeff(const ExpKey& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? Rational(0) : it->second;
}

int Series::max_degree(int j) const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e[j]);
  return d;
}

int Series::min_degree(int j) const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::min(d, e[j]);
  return d;
}

Series mul_pruned(const Series& a, const Series& b, long cap) {
  Series out(a.nvars);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      ExpKey e = key_add(ea, eb);
      if (mu_weight(e, out.nvars) > cap) continue;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

void prune(Series& s, long cap) {
  for (auto it = s.terms.begin(); it != s.terms.end();) {
    if (mu_weight(it->first, s.nvars) > cap)
      it = s.terms.erase(it);
    else
      ++it;
  }
}

}  // namespace verlinde
