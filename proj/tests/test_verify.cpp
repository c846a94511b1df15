#include <doctest.h>

#include <cmath>

#include "rcadj/forms.hpp"
#include "rcadj/verify.hpp"

using namespace rcadj;

namespace {

std::vector<AdjointCoefficient> multiples(const QSeries& basis, double factor, long n_max) {
  std::vector<AdjointCoefficient> out;
  for (long n = 1; n <= n_max; ++n) {
    out.push_back({n, factor * basis.coeff(static_cast<std::size_t>(n)).get_d(), 0.0});
  }
  return out;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("ratio test on synthetic data") {
  const QSeries d46 = catalog_get("delta_4_6", 12);
  const auto exact = multiples(d46, 3.0, 10);
  const RatioReport rep = ratio_test(exact, d46, 1e-3);
  CHECK(rep.spread == 0.0);
  CHECK(rep.lambda == 3.0);
  CHECK(rep.pass);
  CHECK(rep.ratios.size() == 5);  // even coefficients vanish

  auto corrupted = exact;
  corrupted[2].value *= 1.01;
  const RatioReport bad = ratio_test(corrupted, d46, 1e-3);
  CHECK_FALSE(bad.pass);
  CHECK(bad.spread > 1e-3);

  // errors widen the verdict
  corrupted[2].err = 0.1 * std::fabs(corrupted[2].value);
  CHECK(ratio_test(corrupted, d46, 1e-3).pass);

  const std::vector<AdjointCoefficient> evens = {{2, 1.0, 0.0}, {4, 2.0, 0.0}};
  CHECK_THROWS_AS(ratio_test(evens, d46, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(ratio_test(exact, catalog_get("E4", 12), 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(ratio_test(exact, catalog_get("delta_4_6", 5), 1e-3), std::invalid_argument);
}

TEST_CASE("lambda from the first coefficient, synthetic") {
  const QSeries twice = series_scale(catalog_get("delta", 12), 2);
  const auto c = multiples(twice, 5.0, 4);
  const auto est = lambda_from_first_coefficient(c, twice);
  CHECK(est.m0 == 1);
  CHECK(est.lambda == doctest::Approx(5.0));
  CHECK(c[0].value / 2 == est.lambda);
  const QSeries shifted = QSeries::monomial(3, 10, Rational(1, 4));
  CHECK(first_nonzero_index(shifted) == 3);
  CHECK_THROWS_AS(first_nonzero_index(QSeries::monomial(0, 10)), std::invalid_argument);
}

TEST_CASE("lambda estimates agree for the theta configuration") {
  const auto c = AdjointCase::from_integer_parts(CaseId::int_from_half_g, 6, 0, 0);
  const std::size_t terms = 3000;
  const QSeries d46 = catalog_get("delta_4_6", terms + 12);
  const QSeries theta = make_theta(terms + 12);
  const auto direct = lambda_from_first_coefficient(c, d46, theta, 1, terms);
  CHECK(direct.lambda > direct.err);
  const auto coeffs = adjoint_coefficients(series_mul(d46, theta), theta, c, 10, terms);
  const RatioReport rep = ratio_test(coeffs.coefficients, d46, 1e-3);
  CHECK(rep.pass);
  CHECK(std::fabs(rep.lambda - direct.lambda) <= rep.error_budget * std::fabs(rep.lambda));
  CHECK(rep.lambda > -rep.error_budget);
  CHECK_THROWS_AS(lambda_from_first_coefficient(c, d46, theta, 2, terms), std::invalid_argument);
}

TEST_CASE("integral analog has a positive lambda") {
  const auto c = AdjointCase::from_integer_parts(CaseId::integral, 12, 4, 0);
  const std::size_t terms = 2000;
  const auto est = lambda_from_first_coefficient(c, catalog_get("delta", terms + 2),
                                                 catalog_get("E4", terms + 2), 1, terms);
  CHECK(est.lambda > est.err);
  CHECK(est.lambda == doctest::Approx(2.0949786).epsilon(1e-6));
}

TEST_CASE("rewritten sums") {
  const auto zero = rewritten_sum_report(0);
  CHECK(zero.faithful == 0.0);
  CHECK(zero.rewritten == 0.0);
  // a(2) of theta * delta_4_6 is 2 and b(1) = 2
  const auto one = rewritten_sum_report(1);
  CHECK(one.faithful == doctest::Approx(4.0 / std::pow(2.0, 5.5)).epsilon(1e-15));
  // r = 1 only: tau(1) / 2^{11/2}
  CHECK(one.rewritten == doctest::Approx(1.0 / std::pow(2.0, 5.5)).epsilon(1e-15));
  const auto big = rewritten_sum_report(1000);
  CHECK(big.faithful > 0);
  CHECK(std::isfinite(big.rewritten));
}

}
