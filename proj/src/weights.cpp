#include "verlinde/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace verlinde {

namespace {

int partition_rank(const Partition& p) {
  return (int)(p.prime.size() + p.dprime.size());
}

// Floors in this module are partition functionals, bounded by the rank.
long floor_long(const Rational& q) { return rat_floor(q).get_si(); }

// Deterministic generic directions: powers of a seed projected to sum zero.
WeightVector seed_direction(int r, long seed) {
  std::vector<Rational> pw(r);
  Rational cur = 1, tot = 0;
  for (int i = 0; i < r; ++i) {
    cur *= seed;
    pw[i] = cur;
    tot += cur;
  }
  Rational mean = tot / r;
  WeightVector g(r);
  for (int i = 0; i < r; ++i) g.v[i] = pw[i] - mean;
  return g;
}

const std::vector<long>& seed_list() {
  static const std::vector<long> seeds = {3,  5,  7,  11, 13, 17,
                                          19, 23, 29, 31, 37, 41};
  return seeds;
}

WeightVector barycenter(int r) {
  WeightVector b(r);
  for (int m = 0; m < r; ++m) {
    WeightVector vm = simplex_vertex(m, r);
    for (int i = 0; i < r; ++i) b.v[i] += vm.v[i];
  }
  for (auto& x : b.v) x /= r;
  return b;
}

// Slacks of the open simplex constraints: the r-1 gaps and the width bound.
std::vector<Rational> facet_slacks(const WeightVector& c) {
  int r = c.r();
  std::vector<Rational> s;
  s.reserve(r);
  for (int i = 0; i + 1 < r; ++i) s.push_back(c.v[i] - c.v[i + 1]);
  s.push_back(Rational(1) - (c.v[0] - c.v[r - 1]));
  return s;
}

// First-order change of each slack along direction v.
std::vector<Rational> facet_rates(const WeightVector& v) {
  int r = v.r();
  std::vector<Rational> s;
  s.reserve(r);
  for (int i = 0; i + 1 < r; ++i) s.push_back(v.v[i] - v.v[i + 1]);
  s.push_back(-(v.v[0] - v.v[r - 1]));
  return s;
}

bool interior_point(const WeightVector& c) {
  for (const auto& s : facet_slacks(c))
    if (s <= 0) return false;
  return true;
}

// Unit-rate transversal of the wall's hyperplane family: the partition
// functional changes by exactly 1 per unit step.
WeightVector transversal(const Partition& p) {
  int r = partition_rank(p);
  int rp = (int)p.prime.size(), rq = r - rp;
  WeightVector u(r);
  for (int i : p.prime) u.v[i - 1] = Rational(1, rp);
  for (int i : p.dprime) u.v[i - 1] = Rational(-1, rq);
  return u;
}

// Direction along which every partition functional moves, pulling inward on
// any active simplex facet of t0. Throws if t0 is outside the closed simplex.
WeightVector pick_direction(const WeightVector& t0, bool require_interior) {
  int r = t0.r();
  auto parts = all_partitions(r);
  bool interior = interior_point(t0);
  if (require_interior && !interior)
    throw std::invalid_argument("target not interior to the simplex");
  auto slacks = facet_slacks(t0);
  for (const auto& s : slacks)
    if (s < 0) throw std::invalid_argument("target outside the closed simplex");

  WeightVector pull(r);
  if (!interior) pull = wv_sub(barycenter(r), t0);

  for (long seed : seed_list()) {
    WeightVector g = seed_direction(r, seed);
    if (interior) {
      bool ok = true;
      for (const auto& p : parts)
        if (partition_functional(g, p) == 0) {
          ok = false;
          break;
        }
      if (ok) return g;
      continue;
    }
    Rational eta(1, 2);
    for (int t = 0; t < 64; ++t, eta /= 2) {
      WeightVector v = wv_add(pull, wv_scale(g, eta));
      bool ok = true;
      for (const auto& p : parts)
        if (partition_functional(v, p) == 0) {
          ok = false;
          break;
        }
      if (ok) {
        auto rates = facet_rates(v);
        for (size_t f = 0; f < slacks.size(); ++f)
          if (slacks[f] == 0 && rates[f] <= 0) {
            ok = false;
            break;
          }
      }
      if (ok) return v;
    }
  }
  throw std::logic_error("no perturbation direction found");
}

// Largest safe step: no partition functional crosses an integer and no
// positive facet slack is exhausted, in either direction along v.
Rational pick_epsilon(const WeightVector& t0, const WeightVector& v) {
  int r = t0.r();
  Rational eps(1, 2);
  for (const auto& p : all_partitions(r)) {
    Rational dphi = partition_functional(v, p);
    if (dphi == 0) {
      if (is_integer(partition_functional(t0, p)))
        throw std::logic_error("direction parallel to an active wall");
      continue;
    }
    Rational phi0 = partition_functional(t0, p);
    Rational lim = is_integer(phi0) ? Rational(Rational(1) / abs(dphi))
                                    : Rational(dist_to_int(phi0) / abs(dphi));
    eps = std::min(eps, lim);
  }
  auto slacks = facet_slacks(t0);
  auto rates = facet_rates(v);
  for (size_t f = 0; f < slacks.size(); ++f)
    if (slacks[f] > 0 && rates[f] != 0)
      eps = std::min(eps, Rational(slacks[f] / abs(rates[f])));
  return eps / 2;
}

// Postconditions of chamber resolution: the result is regular, interior, and
// its floor signature is the one-sided limit of t0 along v.
void check_resolved(const WeightVector& t0, const WeightVector& v,
                    const WeightVector& c, int side) {
  if (!is_regular(c) || !in_simplex(c))
    throw std::logic_error("chamber resolution left the open simplex");
  auto parts = all_partitions(c.r());
  auto sig = floor_signature(c);
  for (size_t i = 0; i < parts.size(); ++i) {
    Rational phi0 = partition_functional(t0, parts[i]);
    Rational dphi = partition_functional(v, parts[i]) * side;
    long expect;
    if (is_integer(phi0)) {
      long base = floor_long(phi0);
      expect = dphi > 0 ? base : base - 1;
    } else {
      expect = floor_long(phi0);
    }
    if (sig[i] != expect)
      throw std::logic_error("chamber resolution drifted past a wall");
  }
}

WeightVector target_point(long k, const IntegralWeight& lam,
                          ChamberTarget target) {
  if (k < 1) throw std::invalid_argument("level must be positive");
  if (!admissible(k, lam))
    throw std::invalid_argument("weight not admissible at this level");
  return target == ChamberTarget::Hat ? hat_point(k, lam) : lam_over_k(k, lam);
}

void check_adjacent_pair(const WeightVector& cp, const WeightVector& cm,
                         const Wall& w) {
  auto parts = all_partitions(cp.r());
  auto sp = floor_signature(cp);
  auto sm = floor_signature(cm);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == w.part) {
      if (sp[i] != w.level || sm[i] != w.level - 1)
        throw std::logic_error("pair floors wrong at the wall");
    } else if (sp[i] != sm[i]) {
      throw std::logic_error("pair crosses a second wall");
    }
  }
}

// Shared tail of the two pair constructions: starting from a point tstar with
// functional exactly l at w.part, slide within the hyperplane until all other
// partition functionals are non-integral, then step off transversally.
std::pair<WeightVector, WeightVector> split_across(
    const Wall& w, const WeightVector& tstar, bool stay_in_simplex) {
  const Partition& P = w.part;
  int r = partition_rank(P);
  auto parts = all_partitions(r);
  WeightVector u = transversal(P);

  WeightVector base;
  bool found = false;
  for (long seed : seed_list()) {
    WeightVector g = seed_direction(r, seed);
    WeightVector d = wv_sub(g, wv_scale(u, partition_functional(g, P)));
    bool zero = true;
    for (const auto& x : d.v)
      if (x != 0) zero = false;
    if (zero) continue;
    Rational s(1, 2);
    for (int t = 0; t < 64; ++t, s /= 2) {
      WeightVector cand = wv_add(tstar, wv_scale(d, s));
      if (stay_in_simplex && !interior_point(cand)) continue;
      bool ok = true;
      for (const auto& p : parts) {
        if (p == P) continue;
        if (is_integer(partition_functional(cand, p))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        base = cand;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw std::logic_error("no generic point found on the wall");

  Rational eps(1, 2);
  for (const auto& p : parts) {
    if (p == P) continue;
    Rational dphi = partition_functional(u, p);
    if (dphi == 0) continue;
    eps = std::min(eps,
                   Rational(dist_to_int(partition_functional(base, p)) /
                            abs(dphi)));
  }
  if (stay_in_simplex) {
    auto slacks = facet_slacks(base);
    auto rates = facet_rates(u);
    for (size_t f = 0; f < slacks.size(); ++f)
      if (rates[f] != 0)
        eps = std::min(eps, Rational(slacks[f] / abs(rates[f])));
  }
  eps /= 2;

  WeightVector cp = wv_add(base, wv_scale(u, eps));
  WeightVector cm = wv_sub(base, wv_scale(u, eps));
  if (stay_in_simplex && !(in_simplex(cp) && in_simplex(cm)))
    throw std::logic_error("pair left the open simplex");
  check_adjacent_pair(cp, cm, w);
  return {cp, cm};
}

}  // namespace

OrderedBasis::OrderedBasis(int rank, std::vector<Root> rts)
    : r(rank), roots(std::move(rts)) {
  if (r < 2) throw std::invalid_argument("rank must be at least 2");
  if ((int)roots.size() > r - 1)
    throw std::invalid_argument("too many roots for an independent set");
  std::vector<int> parent(r + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& rt : roots) {
    if (rt.i < 1 || rt.i > r || rt.j < 1 || rt.j > r || rt.i == rt.j)
      throw std::invalid_argument("root index out of range");
    int a = find(rt.i), b = find(rt.j);
    if (a == b) throw std::invalid_argument("roots are dependent");
    parent[a] = b;
  }
}

Partition::Partition(std::vector<int> prime_part, int r) {
  std::sort(prime_part.begin(), prime_part.end());
  prime_part.erase(std::unique(prime_part.begin(), prime_part.end()),
                   prime_part.end());
  if (prime_part.empty() || (int)prime_part.size() >= r)
    throw std::invalid_argument("partition block must be proper and nonempty");
  for (int i : prime_part)
    if (i < 1 || i > r) throw std::invalid_argument("index out of range");
  std::vector<bool> in(r + 1, false);
  for (int i : prime_part) in[i] = true;
  if (in[r]) {
    // canonical form keeps r in the complement
    std::vector<int> comp;
    for (int i = 1; i <= r; ++i)
      if (!in[i]) comp.push_back(i);
    prime_part = comp;
    in.assign(r + 1, false);
    for (int i : prime_part) in[i] = true;
  }
  prime = prime_part;
  for (int i = 1; i <= r; ++i)
    if (!in[i]) dprime.push_back(i);
}

WeightVector wv_from_integral(const IntegralWeight& w) {
  WeightVector out(w.r());
  for (int i = 0; i < w.r(); ++i) out.v[i] = w.v[i];
  return out;
}

WeightVector wv_add(const WeightVector& a, const WeightVector& b) {
  WeightVector out(a.r());
  for (int i = 0; i < a.r(); ++i) out.v[i] = a.v[i] + b.v[i];
  return out;
}

WeightVector wv_sub(const WeightVector& a, const WeightVector& b) {
  WeightVector out(a.r());
  for (int i = 0; i < a.r(); ++i) out.v[i] = a.v[i] - b.v[i];
  return out;
}

WeightVector wv_scale(const WeightVector& a, const Rational& s) {
  WeightVector out(a.r());
  for (int i = 0; i < a.r(); ++i) out.v[i] = a.v[i] * s;
  return out;
}

bool wv_equal(const WeightVector& a, const WeightVector& b) {
  return a.v == b.v;
}

Rational wv_sum(const WeightVector& a) {
  Rational s = 0;
  for (const auto& x : a.v) s += x;
  return s;
}

void check_sum_zero(const WeightVector& a) {
  if (wv_sum(a) != 0)
    throw std::invalid_argument("coordinates must sum to zero");
}

WeightVector rho(int r) {
  WeightVector out(r);
  for (int i = 0; i < r; ++i) {
    out.v[i] = Rational(r - 1 - 2 * i, 2);
    out.v[i].canonicalize();
  }
  return out;
}

WeightVector root_vector(const Root& rt, int r) {
  WeightVector out(r);
  out.v[rt.i - 1] = 1;
  out.v[rt.j - 1] = -1;
  return out;
}

WeightVector hat_point(long k, const IntegralWeight& lam) {
  int r = lam.r();
  WeightVector out = wv_add(wv_from_integral(lam), rho(r));
  return wv_scale(out, Rational(1, k + r));
}

WeightVector lam_over_k(long k, const IntegralWeight& lam) {
  return wv_scale(wv_from_integral(lam), Rational(1, k));
}

std::vector<Rational> coords_in_basis(const WeightVector& a,
                                      const OrderedBasis& B) {
  int r = a.r();
  if (B.r != r) throw std::invalid_argument("rank mismatch");
  int n = B.size();
  // rows: coordinates 1..r; columns: basis roots, then the target vector
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(n + 1));
  for (int c = 0; c < n; ++c) {
    m[B.roots[c].i - 1][c] = 1;
    m[B.roots[c].j - 1][c] = -1;
  }
  for (int row = 0; row < r; ++row) m[row][n] = a.v[row];

  std::vector<int> pivot_row(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < r; ++col) {
    int pr = -1;
    for (int i = row; i < r; ++i)
      if (m[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    Rational inv = 1 / m[row][col];
    for (int c = col; c <= n; ++c) m[row][c] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int c = col; c <= n; ++c) m[i][c] -= f * m[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int col = 0; col < n; ++col)
    if (pivot_row[col] < 0) throw std::logic_error("basis columns dependent");
  for (int i = row; i < r; ++i)
    if (m[i][n] != 0)
      throw std::domain_error("weight not in the span of the basis");
  std::vector<Rational> t(n);
  for (int col = 0; col < n; ++col) t[col] = m[pivot_row[col]][n];
  return t;
}

WeightVector integer_part(const WeightVector& a, const OrderedBasis& B) {
  auto t = coords_in_basis(a, B);
  WeightVector out(a.r());
  for (int j = 0; j < B.size(); ++j) {
    long fl = floor_long(t[j]);
    if (fl == 0) continue;
    WeightVector rv = root_vector(B.roots[j], a.r());
    out = wv_add(out, wv_scale(rv, Rational(fl)));
  }
  return out;
}

WeightVector fractional_part(const WeightVector& a, const OrderedBasis& B) {
  return wv_sub(a, integer_part(a, B));
}

Rational partition_functional(const WeightVector& c, const Partition& p) {
  Rational s = 0;
  for (int i : p.prime) s += c.v[i - 1];
  return s;
}

std::vector<Partition> all_partitions(int r) {
  std::vector<Partition> out;
  for (unsigned mask = 1; mask < (1u << (r - 1)); ++mask) {
    std::vector<int> prime;
    for (int i = 1; i < r; ++i)
      if (mask & (1u << (i - 1))) prime.push_back(i);
    out.emplace_back(prime, r);
  }
  return out;
}

bool is_regular(const WeightVector& c) {
  for (const auto& p : all_partitions(c.r()))
    if (is_integer(partition_functional(c, p))) return false;
  return true;
}

bool in_simplex(const WeightVector& c) {
  int r = c.r();
  for (int i = 0; i + 1 < r; ++i)
    if (c.v[i] <= c.v[i + 1]) return false;
  return c.v[0] - c.v[r - 1] < 1;
}

bool admissible(long k, const IntegralWeight& lam) {
  int r = lam.r();
  long sum = 0;
  for (int i = 0; i < r; ++i) {
    sum += lam.v[i];
    if (i + 1 < r && lam.v[i] < lam.v[i + 1]) return false;
  }
  return sum == 0 && lam.v[0] - lam.v[r - 1] <= k;
}

std::vector<IntegralWeight> enumerate_admissible(long k, int r) {
  std::vector<IntegralWeight> out;
  std::vector<long> cur(r);
  auto rec = [&](auto&& self, int i, long prefix) -> void {
    long lo = cur[0] - k;
    if (i == r - 1) {
      long last = -prefix;
      if (last <= cur[i - 1] && last >= lo) {
        cur[i] = last;
        out.emplace_back();
        out.back().v = cur;
      }
      return;
    }
    for (long v = lo; v <= cur[i - 1]; ++v) {
      long rest = -(prefix + v);
      long cnt = r - i - 1;
      if (rest < cnt * lo || rest > cnt * v) continue;
      cur[i] = v;
      self(self, i + 1, prefix + v);
    }
  };
  for (long l1 = 0; l1 <= k; ++l1) {
    cur[0] = l1;
    rec(rec, 1, l1);
  }
  return out;
}

WeightVector simplex_vertex(int m, int r) {
  WeightVector out(r);
  for (int i = 0; i < r; ++i) {
    out.v[i] = i < m ? Rational(r - m, r) : Rational(-m, r);
    out.v[i].canonicalize();
  }
  return out;
}

std::vector<long> floor_signature(const WeightVector& c) {
  std::vector<long> sig;
  for (const auto& p : all_partitions(c.r())) {
    Rational phi = partition_functional(c, p);
    if (is_integer(phi))
      throw std::invalid_argument("point on a wall");
    sig.push_back(floor_long(phi));
  }
  return sig;
}

bool same_chamber(const WeightVector& a, const WeightVector& b) {
  if (a.r() != b.r()) throw std::invalid_argument("rank mismatch");
  return floor_signature(a) == floor_signature(b);
}

std::optional<Wall> wall_between(const WeightVector& a,
                                 const WeightVector& b) {
  auto sa = floor_signature(a);
  auto sb = floor_signature(b);
  auto parts = all_partitions(a.r());
  int diff = -1;
  for (size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] == sb[i]) continue;
    if (diff >= 0) return std::nullopt;
    if (std::abs(sa[i] - sb[i]) != 1) return std::nullopt;
    diff = (int)i;
  }
  if (diff < 0) return std::nullopt;
  return Wall{parts[diff], std::max(sa[diff], sb[diff])};
}

std::vector<Wall> wall_set(long k, const IntegralWeight& lam) {
  if (k < 1) throw std::invalid_argument("level must be positive");
  if (!admissible(k, lam))
    throw std::invalid_argument("weight not admissible at this level");
  int r = lam.r();
  WeightVector a = lam_over_k(k, lam);
  WeightVector b = hat_point(k, lam);
  std::vector<Wall> out;
  for (const auto& p : all_partitions(r)) {
    Rational pa = partition_functional(a, p);
    Rational pb = partition_functional(b, p);
    Rational lo = std::min(pa, pb), hi = std::max(pa, pb);
    for (long l = -floor_long(-lo); Rational(l) <= hi; ++l)
      out.push_back(Wall{p, l});
  }
  return out;
}

bool wall_meets_open_simplex(const Wall& w) {
  int r = partition_rank(w.part);
  Rational mn = partition_functional(simplex_vertex(0, r), w.part);
  Rational mx = mn;
  for (int m = 1; m < r; ++m) {
    Rational val = partition_functional(simplex_vertex(m, r), w.part);
    mn = std::min(mn, val);
    mx = std::max(mx, val);
  }
  return mn < w.level && Rational(w.level) < mx;
}

WeightVector resolve_chamber(long k, const IntegralWeight& lam,
                             ChamberTarget target) {
  WeightVector t0 = target_point(k, lam, target);
  if (is_regular(t0) && in_simplex(t0)) return t0;
  WeightVector v = pick_direction(t0, false);
  Rational eps = pick_epsilon(t0, v);
  WeightVector c = wv_add(t0, wv_scale(v, eps));
  check_resolved(t0, v, c, +1);
  return c;
}

std::pair<WeightVector, WeightVector> resolve_chamber_both(
    long k, const IntegralWeight& lam, ChamberTarget target) {
  WeightVector t0 = target_point(k, lam, target);
  if (is_regular(t0)) {
    if (!in_simplex(t0))
      throw std::invalid_argument("target not interior to the simplex");
    return {t0, t0};
  }
  WeightVector v = pick_direction(t0, true);
  Rational eps = pick_epsilon(t0, v);
  WeightVector cp = wv_add(t0, wv_scale(v, eps));
  WeightVector cm = wv_sub(t0, wv_scale(v, eps));
  check_resolved(t0, v, cp, +1);
  check_resolved(t0, v, cm, -1);
  return {cp, cm};
}

std::optional<std::pair<WeightVector, WeightVector>> chamber_pair_in_simplex(
    const Wall& w) {
  if (!wall_meets_open_simplex(w)) return std::nullopt;
  int r = partition_rank(w.part);
  std::vector<Rational> vals(r);
  int im = 0, iM = 0;
  for (int m = 0; m < r; ++m) {
    vals[m] = partition_functional(simplex_vertex(m, r), w.part);
    if (vals[m] < vals[im]) im = m;
    if (vals[m] > vals[iM]) iM = m;
  }
  WeightVector b = barycenter(r);
  Rational wb = partition_functional(b, w.part);
  Rational wm = vals[im], wM = vals[iM];

  // Interior point of the simplex lying exactly on the wall: blend the two
  // extreme vertices to hit level l, mixed with a little barycenter.
  WeightVector tstar;
  bool found = false;
  Rational eta(1, 4);
  for (int t = 0; t < 64 && !found; ++t, eta /= 2) {
    Rational mu = ((1 - eta) * wM + eta * wb - w.level) / (wM - wm);
    if (mu > 0 && 1 - eta - mu > 0) {
      WeightVector lo = simplex_vertex(im, r);
      WeightVector hi = simplex_vertex(iM, r);
      tstar = wv_add(wv_add(wv_scale(lo, mu), wv_scale(hi, 1 - eta - mu)),
                     wv_scale(b, eta));
      found = true;
    }
  }
  if (!found) throw std::logic_error("no interior point on the wall");
  return split_across(w, tstar, true);
}

std::pair<WeightVector, WeightVector> adjacent_pair_for_wall(const Wall& w) {
  WeightVector tstar = wv_scale(transversal(w.part), Rational(w.level));
  return split_across(w, tstar, false);
}

}  // namespace verlinde
