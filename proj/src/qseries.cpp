#include "rcadj/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rcadj/convolution.hpp"

namespace rcadj {

namespace {

std::optional<FormMeta> merged_meta(const QSeries& a, const QSeries& b, const Rational& ca,
                                    const Rational& cb) {
  if (!a.meta() || !b.meta() || !a.meta()->same_space(*b.meta())) return std::nullopt;
  FormMeta out = *a.meta();
  out.cusp_at_infinity = (ca == 0 || a.meta()->cusp_at_infinity) &&
                         (cb == 0 || b.meta()->cusp_at_infinity);
  return out;
}

// Coefficients of prod_{n>=1} (1 - x^n), i.e. sum_k (-1)^k x^{k(3k-1)/2}.
std::vector<Integer> euler_product(std::size_t length) {
  std::vector<Integer> p(length);
  if (length == 0) return p;
  p[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (g1 >= length) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    p[g1] = sign;
    if (g2 < length) p[g2] = sign;
  }
  return p;
}

}  // namespace

QSeries::QSeries(std::span<const Rational> coeffs, std::optional<FormMeta> meta)
    : meta_(std::move(meta)) {
  if (coeffs.empty()) throw std::invalid_argument("series precision must be positive");
  for (const auto& c : coeffs) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(),
                                       c.get_den_mpz_t());
  numerators_.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    numerators_.push_back(c.get_num() * (denominator_ / c.get_den()));
  }
  normalize();
}

QSeries::QSeries(std::vector<Integer> numerators, Integer denominator, std::optional<FormMeta> meta)
    : numerators_(std::move(numerators)), denominator_(std::move(denominator)),
      meta_(std::move(meta)) {
  if (numerators_.empty()) throw std::invalid_argument("series precision must be positive");
  if (denominator_ == 0) throw std::invalid_argument("zero denominator");
  normalize();
}

QSeries QSeries::zero(std::size_t precision) {
  return QSeries(std::vector<Integer>(precision), Integer(1));
}

QSeries QSeries::monomial(std::size_t exponent, std::size_t precision, const Rational& c) {
  std::vector<Integer> nums(precision);
  if (exponent < precision) nums[exponent] = c.get_num();
  return QSeries(std::move(nums), c.get_den());
}

Rational QSeries::coeff(std::size_t n) const {
  if (n >= precision()) {
    throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond precision " +
                            std::to_string(precision()));
  }
  Rational r(numerators_[n], denominator_);
  r.canonicalize();
  return r;
}

std::vector<Rational> QSeries::coeffs() const {
  std::vector<Rational> out;
  out.reserve(precision());
  for (std::size_t n = 0; n < precision(); ++n) out.push_back(coeff(n));
  return out;
}

QSeries QSeries::with_meta(std::optional<FormMeta> meta) const {
  QSeries out = *this;
  out.meta_ = std::move(meta);
  return out;
}

QSeries QSeries::truncated(std::size_t precision) const {
  if (precision == 0 || precision > this->precision()) {
    throw std::out_of_range("cannot truncate series of precision " +
                            std::to_string(this->precision()) + " to " +
                            std::to_string(precision));
  }
  return QSeries(std::vector<Integer>(numerators_.begin(),
                                      numerators_.begin() + static_cast<std::ptrdiff_t>(precision)),
                 denominator_, meta_);
}

void QSeries::normalize() {
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    for (auto& x : numerators_) x = -x;
  }
  if (denominator_ == 1) return;
  Integer g = denominator_;
  for (const auto& x : numerators_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  // g = gcd(denominator, all numerators); gcd with 0 leaves g unchanged, so an
  // all-zero series ends with g = denominator and denominator 1.
  for (auto& x : numerators_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
}

QSeries series_add(const QSeries& a, const QSeries& b, const Rational& ca, const Rational& cb) {
  const std::size_t n = std::min(a.precision(), b.precision());
  const Integer da = a.denominator() * ca.get_den();
  const Integer db = b.denominator() * cb.get_den();
  Integer den;
  mpz_lcm(den.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  const Integer sa = ca.get_num() * (den / da);
  const Integer sb = cb.get_num() * (den / db);
  std::vector<Integer> nums(n);
  const auto an = a.numerators();
  const auto bn = b.numerators();
  for (std::size_t i = 0; i < n; ++i) {
    nums[i] = sa * an[i];
    mpz_addmul(nums[i].get_mpz_t(), sb.get_mpz_t(), bn[i].get_mpz_t());
  }
  return QSeries(std::move(nums), den, merged_meta(a, b, ca, cb));
}

QSeries series_scale(const QSeries& a, const Rational& c) {
  std::vector<Integer> nums(a.numerators().begin(), a.numerators().end());
  for (auto& x : nums) x *= c.get_num();
  auto meta = a.meta();
  if (meta && c == 0) meta->cusp_at_infinity = true;
  return QSeries(std::move(nums), a.denominator() * c.get_den(), meta);
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  std::optional<FormMeta> meta;
  if (a.meta() && b.meta()) meta = bracket_meta(*a.meta(), *b.meta(), 0);
  return QSeries(convolution::multiply(a.numerators(), b.numerators()),
                 a.denominator() * b.denominator(), meta);
}

QSeries apply_D(const QSeries& a, unsigned r) {
  if (r == 0) return a.with_meta(std::nullopt);
  std::vector<Integer> nums(a.numerators().begin(), a.numerators().end());
  Integer factor;
  for (std::size_t n = 0; n < nums.size(); ++n) {
    if (nums[n] == 0) continue;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(n), r);
    nums[n] *= factor;
  }
  return QSeries(std::move(nums), a.denominator());
}

QSeries make_theta(std::size_t precision) {
  if (precision == 0) throw std::invalid_argument("make_theta: precision must be positive");
  std::vector<Integer> nums(precision);
  nums[0] = 1;
  for (std::size_t j = 1; j * j < precision; ++j) nums[j * j] = 2;
  return QSeries(std::move(nums), Integer(1),
                 FormMeta(TwiceWeight::half(), 4, CharacterMod4::trivial, false));
}

QSeries make_eta_product(std::span<const EtaFactor> factors, std::size_t precision,
                         std::optional<FormMeta> meta) {
  if (precision == 0) throw std::invalid_argument("make_eta_product: precision must be positive");
  std::int64_t order24 = 0;
  for (const auto& f : factors) {
    if (f.multiplier < 1) throw std::invalid_argument("eta multiplier must be positive");
    order24 += f.multiplier * f.exponent;
  }
  if (order24 % 24 != 0) {
    throw std::invalid_argument("non-integral order: q-order " + std::to_string(order24) +
                                "/24");
  }
  if (order24 < 0) throw std::invalid_argument("negative q-order " + std::to_string(order24 / 24));
  const auto order = static_cast<std::size_t>(order24 / 24);

  std::vector<Integer> nums(precision);
  if (order < precision) {
    const std::size_t length = precision - order;
    std::vector<Integer> product(length);
    product[0] = 1;
    for (const auto& f : factors) {
      if (f.exponent == 0) continue;
      const auto m = static_cast<std::size_t>(f.multiplier);
      const std::size_t reduced = (length + m - 1) / m;
      const auto powered = convolution::power(euler_product(reduced), f.exponent, reduced);
      std::vector<Integer> spread(length);
      for (std::size_t i = 0; i < reduced; ++i) spread[i * m] = powered[i];
      product = convolution::multiply(product, spread);
    }
    std::move(product.begin(), product.end(), nums.begin() + static_cast<std::ptrdiff_t>(order));
  }
  return QSeries(std::move(nums), Integer(1), std::move(meta));
}

Rational bernoulli_number(unsigned n) {
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  Integer binom;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += Rational(binom) * b[j];
    }
    b[m] = -acc / (m + 1);
  }
  return b[n];
}

QSeries make_eisenstein(int weight, std::size_t precision) {
  if (weight < 4 || weight % 2 != 0) {
    throw std::invalid_argument("Eisenstein series needs even weight >= 4, got " +
                                std::to_string(weight));
  }
  if (precision == 0) throw std::invalid_argument("make_eisenstein: precision must be positive");
  const Rational scale = Rational(-2 * weight) / bernoulli_number(static_cast<unsigned>(weight));
  std::vector<Integer> sigma(precision);
  Integer power;
  for (std::size_t d = 1; d < precision; ++d) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(weight - 1));
    for (std::size_t m = d; m < precision; m += d) sigma[m] += power;
  }
  std::vector<Integer> nums(precision);
  nums[0] = scale.get_den();
  for (std::size_t n = 1; n < precision; ++n) nums[n] = scale.get_num() * sigma[n];
  return QSeries(std::move(nums), scale.get_den(),
                 FormMeta(TwiceWeight::integer(weight), 1, CharacterMod4::trivial, false));
}

}  // namespace rcadj
