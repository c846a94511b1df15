#include "rcadj/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rcadj {

namespace {

mpfr_prec_t joint_precision(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const Integer& value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(other.precision()) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::from_double(double value, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

double Real::to_double(mpfr_rnd_t rounding) const { return mpfr_get_d(value_, rounding); }

std::string Real::str(int digits) const {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, value_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

Real& Real::operator+=(const Real& rhs) {
  Real out(joint_precision(*this, rhs));
  mpfr_add(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

Real& Real::operator-=(const Real& rhs) {
  Real out(joint_precision(*this, rhs));
  mpfr_sub(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

Real& Real::operator*=(const Real& rhs) {
  Real out(joint_precision(*this, rhs));
  mpfr_mul(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

Real& Real::operator/=(const Real& rhs) {
  Real out(joint_precision(*this, rhs));
  mpfr_div(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, HalfInteger e) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), e.floor(), MPFR_RNDN);
  if (!e.is_integral()) out *= sqrt(x);
  return out;
}

Real pow(const Real& x, const Real& e) {
  Real out(joint_precision(x, e));
  mpfr_pow(out.get(), x.get(), e.get(), MPFR_RNDN);
  return out;
}

mpfr_prec_t bits_for_digits(int decimal_digits) {
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 8;
}

}  // namespace rcadj
