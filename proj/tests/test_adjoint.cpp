#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "rcadj/adjoint.hpp"
#include "rcadj/forms.hpp"

using namespace rcadj;

namespace {

const mpfr_prec_t kBits = bits_for_digits(50);

QSeries theta_delta(std::size_t precision) {
  return series_mul(make_theta(precision), catalog_get("delta_4_6", precision));
}

AdjointCase theta_case() { return AdjointCase::from_integer_parts(CaseId::int_from_half_g, 6, 0, 0); }

// sum_{m=1}^{terms} a(n+m) b(m) alpha(n, m) (n+m)^{-s} in long double
long double naive_l(const QSeries& f, const QSeries& g, const BracketParams& p, long n, double s,
                    std::size_t terms) {
  long double sum = 0;
  for (std::size_t m = 1; m <= terms; ++m) {
    const auto j = static_cast<std::size_t>(n) + m;
    sum += static_cast<long double>(f.coeff(j).get_d()) * g.coeff(m).get_d() *
           alpha_coeff(p, n, static_cast<long>(m)).get_d() / std::pow(static_cast<long double>(j), s);
  }
  return sum;
}

}  // namespace

TEST_SUITE("adjoint") {

TEST_CASE("case identifiers") {
  CHECK(parse_case_id("integral") == CaseId::integral);
  CHECK(parse_case_id("2") == CaseId::int_from_half_g);
  CHECK_FALSE(parse_case_id("4"));
  const auto c = AdjointCase::from_integer_parts(CaseId::half_half, 5, 2, 1);
  CHECK(c.k == HalfInteger::from_twice(11));
  CHECK(c.l == HalfInteger::from_twice(5));
  CHECK(c.target_weight() == HalfInteger::integer(10));
  CHECK_THROWS_AS(AdjointCase::make(CaseId::integral, HalfInteger::half(), HalfInteger::integer(2), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(AdjointCase::from_integer_parts(CaseId::integral, 12, 4, -1), std::invalid_argument);
}

TEST_CASE("case parameter table") {
  using H = HalfInteger;
  auto integral = case_params(AdjointCase::from_integer_parts(CaseId::integral, 12, 4, 1));
  CHECK(integral.gamma_s == H::integer(17));
  CHECK(integral.beta_gamma_den == H::integer(11));
  CHECK(integral.n_exponent == H::integer(11));
  CHECK(integral.four_pi_exponent == H::integer(6));

  auto one = case_params(AdjointCase::from_integer_parts(CaseId::half_half, 5, 2, 1));
  CHECK(one.gamma_s == H::integer(9));
  CHECK(one.beta_gamma_den == H::from_twice(9));
  CHECK(one.n_exponent == H::from_twice(9));
  // l + 2nu + 1/2 with l = 2, nu = 1
  CHECK(one.four_pi_exponent == H::from_twice(9));

  auto two = case_params(theta_case());
  CHECK(two.gamma_s == H::from_twice(11));
  CHECK(two.beta_gamma_num == H::from_twice(11));
  CHECK(two.beta_gamma_den == H::integer(5));
  CHECK(two.n_exponent == H::integer(5));
  CHECK(two.four_pi_exponent == H::half());

  auto three = case_params(AdjointCase::from_integer_parts(CaseId::half_from_int_g, 6, 4, 2));
  CHECK(three.gamma_s == H::from_twice(27));
  CHECK(three.beta_gamma_den == H::from_twice(11));
  CHECK(three.n_exponent == H::from_twice(11));
  CHECK(three.four_pi_exponent == H::integer(8));
}

TEST_CASE("beta") {
  // Gamma(11/2) / (Gamma(5) 2 sqrt(pi)) = (945/32) / 48
  CHECK(beta_value(theta_case(), 1, kBits).to_double() == doctest::Approx(945.0 / 1536.0).epsilon(1e-15));
  CHECK(beta_value(theta_case(), 3, kBits).to_double() ==
        doctest::Approx(945.0 / 1536.0 * 243.0).epsilon(1e-15));
  const auto integral = AdjointCase::from_integer_parts(CaseId::integral, 12, 4, 0);
  const double expected = std::tgamma(15.0) / (std::tgamma(11.0) * std::pow(4 * M_PI, 4));
  CHECK(beta_value(integral, 1, kBits).to_double() == doctest::Approx(expected).epsilon(1e-13));
  for (auto id : {CaseId::integral, CaseId::half_half, CaseId::int_from_half_g, CaseId::half_from_int_g}) {
    for (long n = 1; n <= 5; ++n) {
      CHECK(beta_value(AdjointCase::from_integer_parts(id, 6, 1, 1), n, kBits).sign() > 0);
    }
  }
  CHECK_THROWS_AS(beta_value(theta_case(), 0, kBits), std::invalid_argument);
}

TEST_CASE("hypotheses") {
  CHECK(validate_hypotheses(theta_case(), false).ok);
  CHECK(validate_hypotheses(AdjointCase::from_integer_parts(CaseId::integral, 12, 4, 0), false).ok);
  const auto bad = validate_hypotheses(AdjointCase::from_integer_parts(CaseId::integral, 12, 9, 0), false);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violated.find("l < k - 3") != std::string::npos);
  CHECK(validate_hypotheses(AdjointCase::from_integer_parts(CaseId::integral, 12, 9, 0), true).ok);
  CHECK_FALSE(validate_hypotheses(AdjointCase::from_integer_parts(CaseId::integral, 4, 0, 0), true).ok);
  CHECK(validate_hypotheses(AdjointCase::from_integer_parts(CaseId::half_half, 3, 1, 0), true).ok);
  CHECK_FALSE(validate_hypotheses(AdjointCase::from_integer_parts(CaseId::half_half, 2, 1, 0), true).ok);
  CHECK_FALSE(validate_hypotheses(AdjointCase::from_integer_parts(CaseId::half_half, 3, 2, 0), false).ok);
  CHECK(validate_hypotheses(AdjointCase::from_integer_parts(CaseId::half_from_int_g, 4, 1, 0), false).ok);
  CHECK_FALSE(validate_hypotheses(AdjointCase::from_integer_parts(CaseId::half_from_int_g, 3, 1, 0), false).ok);
}

TEST_CASE("growth profile") {
  CHECK(lemma_exponent(*make_theta(10).meta()) == 0.0);
  CHECK(lemma_exponent(*catalog_get("delta", 10).meta()) == doctest::Approx(5.75));
  CHECK(lemma_exponent(*catalog_get("E4", 10).meta()) == doctest::Approx(3.0));
  const auto theta = fit_tail_profile(make_theta(200), 0.0, 0.1);
  CHECK(theta.exponent == doctest::Approx(0.1));
  CHECK(theta.constant == 2.0);
  CHECK(fit_tail_profile(QSeries::zero(20), 1.0, 0.1).constant == 0.0);
  const QSeries d = catalog_get("delta", 300);
  const auto fit = fit_tail_profile(d, 5.75, 0.1);
  for (std::size_t n = 1; n < 300; ++n) {
    CHECK(std::fabs(d.coeff(n).get_d()) <= fit.constant * std::pow(double(n), fit.exponent));
  }
  CHECK_THROWS_AS(fit_tail_profile(make_theta(5), 0.0, 0.1), std::invalid_argument);
}

TEST_CASE("L-series partial sums") {
  const QSeries f = theta_delta(1200);
  const QSeries g = make_theta(1200);
  const BracketParams p{HalfInteger::integer(6), HalfInteger::half(), 0};
  const auto s = HalfInteger::from_twice(11);
  const TailProfile tail = make_tail_profile(f, g, 0.1);
  const LValue v = l_series_value(f, g, p, 1, s, 1000, tail, 50);
  CHECK(v.value.sign() > 0);
  CHECK(v.terms_used == 1000);
  CHECK(v.value.to_double() == doctest::Approx(double(naive_l(f, g, p, 1, 5.5, 1000))).epsilon(1e-12));
  // m = 0 term: a(1) b(0) / 1
  CHECK(v.boundary.to_double() == 1.0);
  CHECK(v.total().to_double() == doctest::Approx(1.0 + v.value.to_double()));

  CHECK_THROWS_WITH_AS(l_series_value(f, g, p, 500, s, 1000, tail, 50),
                       doctest::Contains("precision >= 1501"), std::invalid_argument);

  // alpha enters for nu > 0
  const QSeries d46 = catalog_get("delta_4_6", 300);
  const QSeries img = rc_bracket(d46, make_theta(300), 1);
  const BracketParams p1{HalfInteger::integer(6), HalfInteger::half(), 1};
  const auto s1 = case_params(AdjointCase::make(CaseId::int_from_half_g, p1.k, p1.l, 1)).gamma_s;
  const LValue w = l_series_value(img, make_theta(300), p1, 2, s1, 200,
                                  make_tail_profile(img, make_theta(300), 0.1), 40);
  CHECK(w.value.to_double() ==
        doctest::Approx(double(naive_l(img, make_theta(300), p1, 2, s1.to_double(), 200))).epsilon(1e-12));
}

TEST_CASE("constant-term blindness and pure constants") {
  const QSeries f = theta_delta(300);
  const QSeries g = make_theta(300);
  const QSeries g_shifted = series_add(g, QSeries::monomial(0, 300), 1, 5);
  const BracketParams p{HalfInteger::integer(6), HalfInteger::half(), 0};
  const auto s = HalfInteger::from_twice(11);
  const TailProfile tail = make_tail_profile(f, g, 0.1);
  for (long n = 1; n <= 5; ++n) {
    const auto a = l_series_value(f, g, p, n, s, 200, tail, 40);
    const auto b = l_series_value(f, g_shifted, p, n, s, 200, tail, 40);
    CHECK(mpfr_equal_p(a.value.get(), b.value.get()));
  }
  const QSeries constant = QSeries::monomial(0, 300, 7).with_meta(g.meta());
  const auto v = l_series_value(f, constant, p, 1, s, 200, make_tail_profile(f, constant, 0.1), 40);
  CHECK(v.value.is_zero());
  CHECK(v.tail_bound == 0.0);
}

TEST_CASE("tail bound is sound and monotone") {
  const QSeries f = theta_delta(4002);
  const QSeries g = make_theta(4002);
  const BracketParams p{HalfInteger::integer(6), HalfInteger::half(), 0};
  const auto s = HalfInteger::from_twice(11);
  const TailProfile tail = make_tail_profile(f, g, 0.1);
  double previous = INFINITY;
  for (std::size_t m : {0u, 1u, 10u, 100u, 1000u, 2000u}) {
    const auto v = l_series_value(f, g, p, 1, s, m, tail, 40);
    CHECK(v.tail_bound <= previous);
    previous = v.tail_bound;
    if (m > 0 && m <= 2000) {
      const auto w = l_series_value(f, g, p, 1, s, 2 * m, tail, 40);
      CHECK(std::fabs((v.value - w.value).to_double()) <= v.tail_bound);
    }
  }
  // divergent exponents give an infinite bound
  const LValue bad = l_series_value(f, g, p, 1, HalfInteger::integer(3), 10, tail, 40);
  CHECK(std::isinf(bad.tail_bound));
}

TEST_CASE("adjoint coefficients") {
  const QSeries f = theta_delta(1211);
  const QSeries g = make_theta(1201);
  const auto c = theta_case();
  CHECK(adjoint_coefficients(f, g, c, 0, 1200).coefficients.empty());
  const auto r = adjoint_coefficients(f, g, c, 10, 1200);
  CHECK(r.warnings.empty());
  REQUIRE(r.coefficients.size() == 10);
  const QSeries d46 = catalog_get("delta_4_6", 11);
  const double lambda = r.coefficients[0].value;
  CHECK(lambda > 0.6);
  for (const auto& x : r.coefficients) {
    CHECK(x.n == (&x - r.coefficients.data()) + 1);
    const double a = d46.coeff(static_cast<std::size_t>(x.n)).get_d();
    CHECK(std::fabs(x.value - lambda * a) <= x.err + std::fabs(a) * r.coefficients[0].err);
  }
  AdjointOptions literal;
  literal.include_constant_term = false;
  const auto r0 = adjoint_coefficients(f, g, c, 1, 1200, literal);
  CHECK(r0.coefficients[0].value == doctest::Approx(lambda - 945.0 / 1536.0).epsilon(1e-12));

  CHECK_THROWS_AS(adjoint_coefficients(g, g, c, 1, 10), std::invalid_argument);
  CHECK_THROWS_WITH_AS(adjoint_coefficients(f, g, c, 20, 1200), doctest::Contains("precision >= 1221"),
                       std::invalid_argument);
  const auto wrong = AdjointCase::from_integer_parts(CaseId::int_from_half_g, 4, 0, 2);
  CHECK_THROWS_AS(adjoint_coefficients(f, g, wrong, 1, 100), std::invalid_argument);

  // delta against E6: k = 6, l = 6 violates l < k - 3 and the tail diverges
  const auto weak = AdjointCase::from_integer_parts(CaseId::integral, 6, 6, 0);
  const auto w = adjoint_coefficients(catalog_get("delta", 103), catalog_get("E6", 101), weak, 2, 100);
  CHECK(w.warnings.size() == 2);
  CHECK(w.coefficients.size() == 2);
  CHECK(std::isinf(w.coefficients[0].err));
}

TEST_CASE("precision from the environment") {
  unsetenv("RC_ADJOINT_PRECISION_DIGITS");
  CHECK(precision_digits_from_env() == 50);
  setenv("RC_ADJOINT_PRECISION_DIGITS", "80", 1);
  CHECK(precision_digits_from_env() == 80);
  setenv("RC_ADJOINT_PRECISION_DIGITS", "8", 1);
  CHECK_THROWS_AS(precision_digits_from_env(), std::invalid_argument);
  setenv("RC_ADJOINT_PRECISION_DIGITS", "abc", 1);
  CHECK_THROWS_AS(precision_digits_from_env(), std::invalid_argument);
  unsetenv("RC_ADJOINT_PRECISION_DIGITS");
}

}
