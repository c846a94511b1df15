#include "rcadj/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rcadj/forms.hpp"

namespace rcadj {

namespace {

double to_double(const QSeries& s, std::size_t n) { return s.coeff(n).get_d(); }

}  // namespace

RatioReport ratio_test(std::span<const AdjointCoefficient> c_list, const QSeries& basis,
                       double tolerance) {
  if (!check_cusp_at_infinity(basis)) {
    throw std::invalid_argument("basis form must vanish at infinity");
  }
  RatioReport out;
  out.tolerance = tolerance;
  std::vector<double> abs_c;
  std::vector<double> errs;
  for (const auto& c : c_list) {
    if (c.n < 1 || static_cast<std::size_t>(c.n) >= basis.precision()) {
      throw std::invalid_argument("basis needs precision > " + std::to_string(c.n));
    }
    const double a = to_double(basis, static_cast<std::size_t>(c.n));
    if (a == 0) continue;
    out.ratios.emplace_back(c.n, c.value / a);
    abs_c.push_back(std::fabs(c.value));
    errs.push_back(c.err);
  }
  if (out.ratios.empty()) {
    throw std::invalid_argument("basis coefficients vanish at every tested n");
  }
  double sum = 0;
  for (const auto& r : out.ratios) sum += r.second;
  out.lambda = sum / static_cast<double>(out.ratios.size());
  for (std::size_t i = 0; i < out.ratios.size(); ++i) {
    const double r = out.ratios[i].second;
    if (r != out.lambda) {
      out.spread = std::max(out.spread, std::fabs(r - out.lambda) / std::fabs(out.lambda));
    }
    const double budget = abs_c[i] == 0 ? (errs[i] == 0 ? 0.0 : INFINITY) : errs[i] / abs_c[i];
    out.error_budget = std::max(out.error_budget, budget);
  }
  out.pass = out.spread <= tolerance + out.error_budget;
  return out;
}

long first_nonzero_index(const QSeries& basis) {
  const auto nums = basis.numerators();
  for (std::size_t m = 1; m < nums.size(); ++m) {
    if (nums[m] != 0) return static_cast<long>(m);
  }
  throw std::invalid_argument("series has no nonzero coefficient beyond q^0");
}

LambdaEstimate lambda_from_first_coefficient(const AdjointCase& c, const QSeries& basis,
                                             const QSeries& g, long m0, std::size_t terms,
                                             const AdjointOptions& options) {
  if (m0 != first_nonzero_index(basis)) {
    throw std::invalid_argument("m0 = " + std::to_string(m0) +
                                " is not the first nonzero index of the basis form");
  }
  const std::size_t need = static_cast<std::size_t>(m0) + terms + 1;
  if (basis.precision() < need || g.precision() < need) {
    throw std::invalid_argument("basis and g need precision >= " + std::to_string(need));
  }
  const QSeries image = rc_bracket(basis.truncated(need), g.truncated(need), c.bracket());
  const auto result = adjoint_coefficients(image, g, c, m0, terms, options);
  const auto& cm = result.coefficients.back();
  const double a = to_double(basis, static_cast<std::size_t>(m0));
  return LambdaEstimate{cm.value / a, cm.err / std::fabs(a), m0};
}

LambdaEstimate lambda_from_first_coefficient(std::span<const AdjointCoefficient> c_list,
                                             const QSeries& basis) {
  const long m0 = first_nonzero_index(basis);
  for (const auto& c : c_list) {
    if (c.n == m0) {
      const double a = to_double(basis, static_cast<std::size_t>(m0));
      return LambdaEstimate{c.value / a, c.err / std::fabs(a), m0};
    }
  }
  throw std::invalid_argument("coefficient list lacks n = " + std::to_string(m0));
}

RewrittenSums rewritten_sum_report(std::size_t terms, int precision_digits) {
  if (terms == 0) return {};
  const mpfr_prec_t bits = bits_for_digits(precision_digits);
  const auto s = HalfInteger::from_twice(11);

  const QSeries theta = make_theta(terms + 2);
  const QSeries f = series_mul(theta, catalog_get("delta_4_6", terms + 2));
  Real faithful(bits);
  for (std::size_t m = 1; m <= terms; ++m) {
    const auto& b = theta.numerators()[m];
    const auto& a = f.numerators()[m + 1];
    if (b == 0 || a == 0) continue;
    faithful += Real(Integer(a * b), bits) / pow(Real(static_cast<long>(m + 1), bits), s);
  }

  const std::size_t top = terms * terms + 2;
  const QSeries tau = catalog_get("delta_4_6", top);
  const auto t = tau.numerators();
  Real rewritten(bits);
  for (std::size_t m = 1; m <= terms; ++m) {
    const std::size_t j = m * m + 1;
    Integer inner = 0;
    // r^2 > j gives a negative index, where the coefficient is 0
    for (std::size_t r = 1; r * r <= j; ++r) inner += t[j - r * r];
    if (inner == 0) continue;
    rewritten += Real(inner, bits) / pow(Real(static_cast<long>(j), bits), s);
  }
  return RewrittenSums{faithful.to_double(), rewritten.to_double()};
}

}  // namespace rcadj
