#pragma once

#include "verlinde/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace verlinde {

/// Point of the dual space V* = {a in R^r : sum a_i = 0}, exact coordinates.
struct WeightVector {
  std::vector<Rational> v;

  WeightVector() = default;
  explicit WeightVector(int r) : v(r) {}
  int r() const { return (int)v.size(); }
};

/// Integer weight with coordinate sum zero.
struct IntegralWeight {
  std::vector<long> v;

  IntegralWeight() = default;
  explicit IntegralWeight(int r) : v(r) {}
  int r() const { return (int)v.size(); }
};

/// Oriented root alpha^{ij} = x_i - x_j (1-based indices).
struct Root {
  int i = 0, j = 0;
  bool operator==(const Root&) const = default;
};

/// Ordered tuple of independent roots (edges form a forest).
/// A "full" basis for rank r has r-1 roots and spans V*.
struct OrderedBasis {
  int r = 0;
  std::vector<Root> roots;

  OrderedBasis() = default;
  OrderedBasis(int rank, std::vector<Root> rts);  // validates independence
  int size() const { return (int)roots.size(); }
  bool full() const { return size() == r - 1; }
  bool operator==(const OrderedBasis&) const = default;
};

/// Two-block partition of {1..r}; canonical form keeps r in dprime.
struct Partition {
  std::vector<int> prime;   // sorted, nonempty, excludes r
  std::vector<int> dprime;  // sorted complement, contains r

  Partition() = default;
  Partition(std::vector<int> prime_part, int r);  // canonicalizes
  bool operator==(const Partition&) const = default;
};

struct Wall {
  Partition part;
  long level = 0;
  bool operator==(const Wall&) const = default;
};

// --- basic vectors -------------------------------------------------------

WeightVector wv_from_integral(const IntegralWeight& w);
WeightVector wv_add(const WeightVector& a, const WeightVector& b);
WeightVector wv_sub(const WeightVector& a, const WeightVector& b);
WeightVector wv_scale(const WeightVector& a, const Rational& s);
bool wv_equal(const WeightVector& a, const WeightVector& b);
Rational wv_sum(const WeightVector& a);
void check_sum_zero(const WeightVector& a);

/// Half-sum-of-positive-roots vector ((r-1)/2, (r-3)/2, ..., (1-r)/2).
WeightVector rho(int r);

WeightVector root_vector(const Root& rt, int r);

/// lambda_hat / k_hat = (lambda + rho) / (k + r).
WeightVector hat_point(long k, const IntegralWeight& lam);
WeightVector lam_over_k(long k, const IntegralWeight& lam);

// --- coordinates in a root basis ----------------------------------------

/// Solves a = sum_j t_j beta_j exactly; throws if a is not in the span.
std::vector<Rational> coords_in_basis(const WeightVector& a,
                                      const OrderedBasis& B);

/// [a]_B = sum_j floor(t_j) beta_j (lattice part of a along B).
WeightVector integer_part(const WeightVector& a, const OrderedBasis& B);

/// {a}_B = a - [a]_B, coordinates in [0,1) along B.
WeightVector fractional_part(const WeightVector& a, const OrderedBasis& B);

// --- regularity, simplex, chambers ---------------------------------------

Rational partition_functional(const WeightVector& c, const Partition& p);

/// All canonical two-block partitions of {1..r} (2^{r-1} - 1 of them).
std::vector<Partition> all_partitions(int r);

/// True iff every proper nonempty coordinate-subset sum is non-integral.
bool is_regular(const WeightVector& c);

/// Open stability simplex: c_1 > ... > c_r, c_1 - c_r < 1, sum = 0.
bool in_simplex(const WeightVector& c);

/// True iff lambda/k lies in the closed simplex.
bool admissible(long k, const IntegralWeight& lam);

/// All integer weights with lambda/k in the closed simplex, in lexicographic
/// order.
std::vector<IntegralWeight> enumerate_admissible(long k, int r);

/// Vertex m of the closed simplex: first m coordinates (r-m)/r, rest -m/r.
WeightVector simplex_vertex(int m, int r);

/// Floor signature over all canonical partitions; requires regular input.
std::vector<long> floor_signature(const WeightVector& c);

/// Exact chamber comparison via floor signatures.
/// Throws std::invalid_argument("point on a wall") on non-regular input.
bool same_chamber(const WeightVector& a, const WeightVector& b);

/// If a and b sit in adjacent chambers (signatures differing at exactly one
/// partition, by one), returns that wall; its level is the larger floor, so
/// the point whose floor equals the level is on the positive side.
std::optional<Wall> wall_between(const WeightVector& a, const WeightVector& b);

/// Walls with level between the partition sums of lambda/k and
/// lambda_hat/k_hat (inclusive). Requires admissible lambda.
std::vector<Wall> wall_set(long k, const IntegralWeight& lam);

/// Whether the wall's hyperplane meets the open simplex.
bool wall_meets_open_simplex(const Wall& w);

// --- chamber representatives ---------------------------------------------

enum class ChamberTarget { LamOverK, Hat };

/// Regular point of the open simplex whose chamber closure contains the
/// target point (lambda/k or lambda_hat/k_hat). Deterministic.
WeightVector resolve_chamber(long k, const IntegralWeight& lam,
                             ChamberTarget target);

/// Both perturbation sides of the target (equal when the target is itself
/// regular). Requires the target to be interior to the simplex.
std::pair<WeightVector, WeightVector> resolve_chamber_both(
    long k, const IntegralWeight& lam, ChamberTarget target);

/// For a wall meeting the open simplex: a pair of regular points of the open
/// simplex in the two chambers adjacent across it (floors l and l-1).
/// nullopt when the wall misses the open simplex.
std::optional<std::pair<WeightVector, WeightVector>> chamber_pair_in_simplex(
    const Wall& w);

/// Adjacent regular pair across the wall anywhere in V* (not confined to the
/// simplex); positive side first, floors l and l-1 at the wall's partition.
std::pair<WeightVector, WeightVector> adjacent_pair_for_wall(const Wall& w);

}  // namespace verlinde
