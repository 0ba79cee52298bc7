#pragma once

#include "verlinde/residue.hpp"

#include <vector>

namespace verlinde {

/// Lattice points of the finite sum: integer vectors n with n_r = 0,
/// consecutive gaps strictly between 0 and khat, and no pair difference
/// divisible by khat. Deterministic order (ascending gap tuples).
std::vector<std::vector<long>> enumerate_lattice(int r, long khat);

/// Closed form for the lattice size: prod_{i=1}^{r-1} (khat - i).
long lattice_count(int r, long khat);

struct SumResult {
  Integer value;       // certified nearest integer
  double error_bound;  // certified bound on the numerical error
  long precision;      // working precision in bits
};

/// Trigonometric-sum route. precision <= 0 selects the VERLINDE_PRECISION
/// environment override or the 256-bit default. Throws std::runtime_error
/// ("insufficient precision") when the result cannot be certified to the
/// nearest integer.
SumResult ver_sum(const ModuliInput& in, long precision = 0);

long default_precision();

}  // namespace verlinde
