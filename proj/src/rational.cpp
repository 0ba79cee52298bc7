#include "verlinde/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace verlinde {

Integer rat_floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational frac_part(const Rational& q) { return q - Rational(rat_floor(q)); }

Rational dist_to_int(const Rational& q) {
  Rational f = frac_part(q);
  Rational g = 1 - f;
  return f < g ? f : g;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Rational bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while ((int)cache.size() <= n) {
    int m = (int)cache.size();
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(binomial(m + 1, m)));
  }
  return cache[n];
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return out;
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational int_pow(const Rational& base, unsigned long e) {
  return Rational(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

}  // namespace verlinde
