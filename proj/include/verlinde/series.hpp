#pragma once

#include "verlinde/rational.hpp"

#include <array>
#include <map>
#include <vector>

namespace verlinde {

// Laurent monomials in up to kMaxVars iteration variables y_1..y_n.
// Monomials are graded by mu(y^e) = sum_j e_j * 2^(j-1); the grading is used
// to prune products without affecting the extracted residue coefficient (the
// weights grow strictly, so every geometric correction term raises mu by at
// least 1, which makes per-factor completeness up to a finite mu-excess
// sufficient for exactness).
constexpr int kMaxVars = 4;

using ExpKey = std::array<int, kMaxVars>;

inline long var_weight(int j) { return 1L << j; }

long mu_weight(const ExpKey& e, int nvars);

ExpKey key_add(const ExpKey& a, const ExpKey& b);

/// The residue target exponent (-1, ..., -1, 0, ...).
ExpKey residue_key(int nvars);

/// A homogeneous linear form in the iteration variables.
struct LinearForm {
  std::vector<Rational> c;

  LinearForm() = default;
  explicit LinearForm(int nvars) : c(nvars) {}

  int nvars() const { return (int)c.size(); }
  bool is_zero() const;
  /// Smallest variable index with nonzero coefficient, -1 if zero.
  int lead_index() const;
  /// Sign of the leading coefficient: +1, -1, or 0 for the zero form.
  int lex_sign() const;
  LinearForm negated() const;
  LinearForm scaled(const Rational& s) const;
  /// mu of the leading monomial. Throws on the zero form.
  long mu_valuation() const;
};

struct Series {
  int nvars = 0;
  std::map<ExpKey, Rational> terms;

  Series() = default;
  explicit Series(int n) : nvars(n) {}

  static Series one(int n);
  static Series monomial(int n, const ExpKey& e, const Rational& coeff);
  static Series from_form(const LinearForm& f);

  bool empty() const { return terms.empty(); }
  void add_term(const ExpKey& e, const Rational& coeff);
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  void scale(const Rational& s);
  Rational coeff(const ExpKey& e) const;

  /// Largest exponent of variable j present (kept-degree bound), 0 if empty.
  int max_degree(int j) const;
  /// Smallest exponent of variable j present (valuation floor), 0 if empty.
  int min_degree(int j) const;
};

/// Product, discarding every result monomial with mu-weight above cap.
Series mul_pruned(const Series& a, const Series& b, long cap);

/// Drops monomials with mu-weight above cap in place.
void prune(Series& s, long cap);

}  // namespace verlinde
