#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rcadj/adjoint.hpp"

namespace rcadj {

struct RatioReport {
  // (n, c_n / a(n)) over n with a(n) != 0
  std::vector<std::pair<long, double>> ratios;
  // mean ratio: the eigenvalue estimate
  double lambda = 0;
  // max |r - lambda| / |lambda|
  double spread = 0;
  // max err / |c_n| over the same n
  double error_budget = 0;
  double tolerance = 0;
  bool pass = false;
};

// Compares adjoint coefficients against a spanning form of a one-dimensional
// space. Throws std::invalid_argument when the basis is not cuspidal, is too
// short for the largest n, or vanishes at every listed n.
RatioReport ratio_test(std::span<const AdjointCoefficient> c_list, const QSeries& basis,
                       double tolerance);

struct LambdaEstimate {
  double lambda = 0;
  double err = 0;
  long m0 = 0;
};

// Index of the first nonzero coefficient a(m), m >= 1; throws
// std::invalid_argument for a series vanishing beyond q^0.
long first_nonzero_index(const QSeries& basis);

// lambda = c(m0) / a(m0) for the adjoint of T(basis) = [basis, g]_nu against
// g. `basis` is the generator of S_k; m0 must be its first nonzero index
// (checked). The bracket is formed at precision m0 + terms + 1, so basis
// needs at least that many coefficients.
LambdaEstimate lambda_from_first_coefficient(const AdjointCase& c, const QSeries& basis,
                                             const QSeries& g, long m0, std::size_t terms,
                                             const AdjointOptions& options = {});

// Same from already computed coefficients.
LambdaEstimate lambda_from_first_coefficient(std::span<const AdjointCoefficient> c_list,
                                             const QSeries& basis);

struct RewrittenSums {
  // sum_{m=1}^{M} a(m + 1) b(m) / (m + 1)^{11/2}, a = coefficients of
  // theta * delta_4_6 and b those of theta
  double faithful = 0;
  // sum_{m=1}^{M} sum_{r=1}^{m^2+1} tau_{4,6}(m^2 + 1 - r^2) / (m^2 + 1)^{11/2}
  double rewritten = 0;
};

// Both partial sums for M terms (M = 0 gives zeros). Only the first is
// expected to be positive; their relation is not asserted.
RewrittenSums rewritten_sum_report(std::size_t terms, int precision_digits = 50);

}  // namespace rcadj
