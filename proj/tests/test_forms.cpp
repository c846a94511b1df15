#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "rcadj/forms.hpp"

using namespace rcadj;

TEST_SUITE("forms") {

TEST_CASE("catalog entries carry their spaces") {
  CHECK(catalog().size() == 5);
  const QSeries d46 = catalog_get("delta_4_6", 20);
  REQUIRE(d46.meta());
  CHECK(d46.meta()->weight == HalfInteger::integer(6));
  CHECK(d46.meta()->level == 4);
  CHECK(d46.meta()->cusp_at_infinity);
  CHECK(check_cusp_at_infinity(d46));
  CHECK_FALSE(check_cusp_at_infinity(catalog_get("E4", 5)));
  CHECK(catalog_get("delta", 15).coeff(2) == -24);
  CHECK_THROWS_AS(catalog_get("nope", 5), std::invalid_argument);
}

TEST_CASE("linear combinations of catalog names") {
  const QSeries c = catalog_get("2*E4 - 3/2*E6", 4);
  CHECK(c.coeff(0) == Rational(1, 2));
  CHECK(c.coeff(1) == 2 * 240 + 3 * 504 / 2);
  const QSeries mixed = catalog_get("delta + delta", 6);
  CHECK(mixed.coeff(1) == 2);
  CHECK(catalog_get("-E4", 3).coeff(1) == -240);
  // different weights cannot be combined into a modular form, the sum loses its metadata
  CHECK_FALSE(catalog_get("E4 + E6", 3).meta());
  CHECK_THROWS_AS(catalog_get("E4 +", 3), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("2**E4", 3), std::invalid_argument);
}

TEST_CASE("delta_4_6 is a normalized Hecke eigenform") {
  const QSeries d46 = catalog_get("delta_4_6", 51);
  const auto naive = oracle::eta_like(2, 12, 1, 51);
  for (std::size_t n = 0; n < 51; ++n) CHECK(d46.coeff(n) == naive[n]);
  CHECK(d46.coeff(1) == 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t m = 1; m <= 50; m += 2) {
    for (std::size_t n = 1; m * n <= 50; n += 2) {
      if (std::gcd(m, n) == 1) pairs.emplace_back(m, n);
    }
  }
  for (bool ok : check_hecke_multiplicativity(d46, pairs)) CHECK(ok);
  const std::vector<std::pair<std::size_t, std::size_t>> shared = {{3, 3}};
  CHECK_THROWS_AS(check_hecke_multiplicativity(d46, shared), std::invalid_argument);
  const std::vector<std::pair<std::size_t, std::size_t>> far = {{7, 11}};
  CHECK_THROWS_AS(check_hecke_multiplicativity(d46, far), std::out_of_range);
  CHECK_THROWS_AS(check_hecke_multiplicativity(catalog_get("E4", 10), pairs),
                  std::invalid_argument);
}

TEST_CASE("Ramanujan tau is multiplicative") {
  const QSeries d = catalog_get("delta", 60);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t m = 2; m < 60; ++m) {
    for (std::size_t n = m + 1; m * n < 60; ++n) {
      if (std::gcd(m, n) == 1) pairs.emplace_back(m, n);
    }
  }
  for (bool ok : check_hecke_multiplicativity(d, pairs)) CHECK(ok);
  // a multiplicativity failure is reported, not thrown
  const QSeries e4_scaled = series_scale(catalog_get("E4", 20), Rational(1, 240));
  const std::vector<std::pair<std::size_t, std::size_t>> p23 = {{2, 3}};
  CHECK(check_hecke_multiplicativity(e4_scaled, p23) == std::vector<bool>{true});
  const QSeries perturbed = series_add(d, QSeries::monomial(6, 60), 1, 1);
  CHECK(check_hecke_multiplicativity(perturbed, p23) == std::vector<bool>{false});
}

}
