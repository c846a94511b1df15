#pragma once

#include "rcadj/half_integer.hpp"
#include "rcadj/qseries.hpp"

namespace rcadj {

// Weights of the two bracketed forms and the bracket order.
struct BracketParams {
  TwiceWeight k;
  TwiceWeight l;
  int nu = 0;
};

// Gamma(x + hi) / Gamma(x + lo) = prod_{j=lo}^{hi-1} (x + j), exactly.
// Throws std::invalid_argument when hi < lo.
Rational gamma_ratio(TwiceWeight x, unsigned hi, unsigned lo);

// C_r(k, l; nu) = (-1)^{nu-r} binom(nu, r) Gamma(k+nu) Gamma(l+nu)
//                 / (Gamma(k+r) Gamma(l+nu-r)).
Rational rc_coefficient(const BracketParams& p, int r);

// sum_r |C_r(k, l; nu)|, which bounds |alpha(n, m)| / (n + m)^nu.
Rational alpha_weight_sum(const BracketParams& p);

// [f, g]_nu = sum_r C_r D^r f D^{nu-r} g at the smaller precision. When both
// series carry metadata their weights must match p (std::invalid_argument
// otherwise) and the result carries bracket_meta(f, g, nu).
QSeries rc_bracket(const QSeries& f, const QSeries& g, const BracketParams& p);

// Same, with k and l read from the metadata of f and g.
QSeries rc_bracket(const QSeries& f, const QSeries& g, int nu);

// alpha(k, l, nu, n, m) = sum_r C_r(k, l; nu) n^r m^{nu-r}, the coefficient of
// q^{n+m} in [q^n, q^m]_nu. m = 0 is allowed and gives C_nu n^nu.
Rational alpha_coeff(const BracketParams& p, long n, long m);

}  // namespace rcadj
