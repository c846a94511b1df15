#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rcadj/form_meta.hpp"
#include "rcadj/rational.hpp"

namespace rcadj {

// Truncated q-expansion sum_{n < precision} a(n) q^n with exact rational
// coefficients. Stored as integer numerators over a single positive
// denominator kept minimal, so equal series compare equal member-wise.
// Immutable once built.
class QSeries {
 public:
  // Throws std::invalid_argument when coeffs is empty.
  explicit QSeries(std::span<const Rational> coeffs, std::optional<FormMeta> meta = std::nullopt);
  QSeries(std::vector<Integer> numerators, Integer denominator,
          std::optional<FormMeta> meta = std::nullopt);

  static QSeries zero(std::size_t precision);
  // c q^exponent, known to the given precision.
  static QSeries monomial(std::size_t exponent, std::size_t precision, const Rational& c = 1);

  std::size_t precision() const { return numerators_.size(); }
  // Throws std::out_of_range for n >= precision().
  Rational coeff(std::size_t n) const;
  std::vector<Rational> coeffs() const;

  std::span<const Integer> numerators() const { return numerators_; }
  const Integer& denominator() const { return denominator_; }
  bool is_integral() const { return denominator_ == 1; }

  const std::optional<FormMeta>& meta() const { return meta_; }
  QSeries with_meta(std::optional<FormMeta> meta) const;
  // First `precision` coefficients; throws if that exceeds what is known.
  QSeries truncated(std::size_t precision) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  void normalize();

  std::vector<Integer> numerators_;
  Integer denominator_{1};
  std::optional<FormMeta> meta_;
};

// ca a + cb b at the smaller precision. Metadata survives only when both
// inputs carry it and describe the same space.
QSeries series_add(const QSeries& a, const QSeries& b, const Rational& ca, const Rational& cb);

QSeries series_scale(const QSeries& a, const Rational& c);

// Cauchy product at the smaller precision. With both metas present the result
// carries bracket_meta(a, b, 0).
QSeries series_mul(const QSeries& a, const QSeries& b);

// D^r: multiplies a(n) by n^r. Drops metadata.
QSeries apply_D(const QSeries& a, unsigned r);

// Classical theta series sum_{n in Z} q^{n^2}: weight 1/2, level 4.
QSeries make_theta(std::size_t precision);

// eta(multiplier z)^exponent
struct EtaFactor {
  std::int64_t multiplier = 1;
  std::int64_t exponent = 1;
};

// prod eta(m_i z)^{e_i}, expanded through the pentagonal number theorem.
// Throws std::invalid_argument ("non-integral order") unless
// sum m_i e_i / 24 is an integer, and for a negative order.
QSeries make_eta_product(std::span<const EtaFactor> factors, std::size_t precision,
                         std::optional<FormMeta> meta = std::nullopt);

// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli_number(unsigned n);

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 4, level 1.
QSeries make_eisenstein(int weight, std::size_t precision);

}  // namespace rcadj
