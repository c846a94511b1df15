#include "rcadj/bracket.hpp"

#include <stdexcept>
#include <string>

namespace rcadj {

namespace {

void check_params(const BracketParams& p) {
  if (p.nu < 0) throw std::invalid_argument("bracket order nu must be nonnegative");
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational integer_power(long base, unsigned e) {
  Integer out;
  mpz_set_si(out.get_mpz_t(), base);
  mpz_pow_ui(out.get_mpz_t(), out.get_mpz_t(), e);
  return Rational(out);
}

}  // namespace

Rational gamma_ratio(TwiceWeight x, unsigned hi, unsigned lo) {
  if (hi < lo) throw std::invalid_argument("gamma_ratio requires hi >= lo");
  const Rational base = x.to_rational();
  Rational out = 1;
  for (unsigned j = lo; j < hi; ++j) out *= base + j;
  return out;
}

Rational rc_coefficient(const BracketParams& p, int r) {
  check_params(p);
  if (r < 0 || r > p.nu) {
    throw std::invalid_argument("rc_coefficient index r=" + std::to_string(r) +
                                " outside 0.." + std::to_string(p.nu));
  }
  const auto nu = static_cast<unsigned>(p.nu);
  const auto ur = static_cast<unsigned>(r);
  Rational c = Rational(binomial(nu, ur)) * gamma_ratio(p.k, nu, ur) *
               gamma_ratio(p.l, nu, nu - ur);
  return (p.nu - r) % 2 == 0 ? c : Rational(-c);
}

Rational alpha_weight_sum(const BracketParams& p) {
  Rational total = 0;
  for (int r = 0; r <= p.nu; ++r) total += abs(rc_coefficient(p, r));
  return total;
}

QSeries rc_bracket(const QSeries& f, const QSeries& g, const BracketParams& p) {
  check_params(p);
  std::optional<FormMeta> meta;
  if (f.meta() && g.meta()) {
    if (f.meta()->weight != p.k || g.meta()->weight != p.l) {
      throw std::invalid_argument("bracket weights (" + p.k.str() + ", " + p.l.str() +
                                  ") disagree with series weights (" + f.meta()->weight.str() +
                                  ", " + g.meta()->weight.str() + ")");
    }
    meta = bracket_meta(*f.meta(), *g.meta(), p.nu);
  }
  std::optional<QSeries> sum;
  for (int r = 0; r <= p.nu; ++r) {
    const QSeries term = series_mul(apply_D(f, static_cast<unsigned>(r)),
                                    apply_D(g, static_cast<unsigned>(p.nu - r)));
    const Rational c = rc_coefficient(p, r);
    sum = sum ? series_add(*sum, term, Rational(1), c) : series_scale(term, c);
  }
  return sum->with_meta(meta);
}

QSeries rc_bracket(const QSeries& f, const QSeries& g, int nu) {
  if (!f.meta() || !g.meta()) {
    throw std::invalid_argument("rc_bracket without explicit weights needs metadata on both series");
  }
  return rc_bracket(f, g, BracketParams{f.meta()->weight, g.meta()->weight, nu});
}

Rational alpha_coeff(const BracketParams& p, long n, long m) {
  check_params(p);
  if (n < 1 || m < 0) throw std::invalid_argument("alpha_coeff requires n >= 1 and m >= 0");
  Rational total = 0;
  for (int r = 0; r <= p.nu; ++r) {
    total += rc_coefficient(p, r) * integer_power(n, static_cast<unsigned>(r)) *
             integer_power(m, static_cast<unsigned>(p.nu - r));
  }
  return total;
}

}  // namespace rcadj
