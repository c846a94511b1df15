#pragma once

#include <string>

#include <mpfr.h>

#include "rcadj/half_integer.hpp"
#include "rcadj/rational.hpp"

namespace rcadj {

// Owning MPFR value with an explicit precision in bits. Binary operations
// produce a result at the larger of the two operand precisions, so no global
// precision state is involved.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 53);
  Real(long value, mpfr_prec_t bits);
  Real(const Integer& value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t bits);
  static Real from_double(double value, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double(mpfr_rnd_t rounding = MPFR_RNDN) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  // Decimal rendering with the given number of significant digits.
  std::string str(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
// x^e for real x > 0 and half-integer e.
Real pow(const Real& x, HalfInteger e);
Real pow(const Real& x, const Real& e);

// Bits needed for the given number of significant decimal digits.
mpfr_prec_t bits_for_digits(int decimal_digits);

}  // namespace rcadj
