#include "rcadj/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace rcadj {

namespace {

bool parity_matches(CaseId id, TwiceWeight k, TwiceWeight l) {
  switch (id) {
    case CaseId::integral: return k.is_integral() && l.is_integral();
    case CaseId::half_half: return !k.is_integral() && !l.is_integral();
    case CaseId::int_from_half_g: return k.is_integral() && !l.is_integral();
    case CaseId::half_from_int_g: return !k.is_integral() && l.is_integral();
  }
  return false;
}

std::string describe(const AdjointCase& c) {
  return std::string(to_string(c.id)) + " (k=" + c.k.str() + ", l=" + c.l.str() +
         ", nu=" + std::to_string(c.nu) + ")";
}

Real integer_real(const Integer& x, mpfr_prec_t bits) { return Real(x, bits); }

// Rising product Gamma(x) / Gamma(x0) with x0 in {1/2, 1}.
Rational gamma_rational_part(HalfInteger x) {
  const HalfInteger base = x.is_integral() ? HalfInteger::integer(1) : HalfInteger::half();
  const auto steps = static_cast<unsigned>((x - base).floor());
  return gamma_ratio(base, steps, 0);
}

// Precomputed floating data for evaluating many L_n at one s.
class LSeriesEvaluator {
 public:
  LSeriesEvaluator(const QSeries& f, const QSeries& g, const BracketParams& p, HalfInteger s,
                   std::size_t max_index, std::size_t terms, mpfr_prec_t bits)
      : p_(p), bits_(bits), f_num_(f.numerators()), g_num_(g.numerators()) {
    const Real f_den(f.denominator(), bits);
    const Real g_den(g.denominator(), bits);
    f_.reserve(max_index + 1);
    inv_pow_.reserve(max_index + 1);
    for (std::size_t j = 0; j <= max_index; ++j) {
      f_.push_back(f_num_[j] == 0 ? Real(bits) : integer_real(f_num_[j], bits) / f_den);
      inv_pow_.push_back(j == 0 ? Real(bits)
                                : Real(1, bits) / pow(Real(static_cast<long>(j), bits), s));
    }
    g_.reserve(terms + 1);
    for (std::size_t m = 0; m <= terms; ++m) {
      g_.push_back(g_num_[m] == 0 ? Real(bits) : integer_real(g_num_[m], bits) / g_den);
    }
    for (int r = 0; r <= p.nu; ++r) rc_.emplace_back(rc_coefficient(p, r), bits);
  }

  Real partial_sum(long n, std::size_t terms) const {
    const auto c = alpha_polynomial(n);
    Real sum(bits_);
    for (std::size_t m = 1; m <= terms; ++m) {
      const std::size_t j = static_cast<std::size_t>(n) + m;
      if (g_num_[m] == 0 || f_num_[j] == 0) continue;
      sum += f_[j] * g_[m] * alpha(c, m) * inv_pow_[j];
    }
    return sum;
  }

  Real boundary(long n) const {
    const auto j = static_cast<std::size_t>(n);
    if (g_num_[0] == 0 || f_num_[j] == 0) return Real(bits_);
    return f_[j] * g_[0] * alpha(alpha_polynomial(n), 0) * inv_pow_[j];
  }

 private:
  // C_r n^r for r = 0..nu
  std::vector<Real> alpha_polynomial(long n) const {
    std::vector<Real> c;
    Real n_pow(1, bits_);
    const Real nn(n, bits_);
    for (int r = 0; r <= p_.nu; ++r) {
      c.push_back(rc_[static_cast<std::size_t>(r)] * n_pow);
      n_pow *= nn;
    }
    return c;
  }

  // sum_r C_r n^r m^{nu-r} by Horner in m.
  Real alpha(const std::vector<Real>& c, std::size_t m) const {
    if (c.size() == 1) return c.front();
    const Real mm(static_cast<long>(m), bits_);
    Real acc = c.front();
    for (std::size_t r = 1; r < c.size(); ++r) acc = acc * mm + c[r];
    return acc;
  }

  BracketParams p_;
  mpfr_prec_t bits_;
  std::span<const Integer> f_num_;
  std::span<const Integer> g_num_;
  std::vector<Real> f_;
  std::vector<Real> g_;
  std::vector<Real> inv_pow_;
  std::vector<Real> rc_;
};

// Bound on sum_{m > M} C (n+m)^{e_f + nu - s} m^{e_g} with C = C_f C_g A:
// for e_f + nu - s <= 0 the summand is at most C m^q with q = e_f + e_g + nu - s,
// and for q < -1 the sum is at most the integral of x^q over [M, inf)
// (over [1, inf) plus the m = 1 term when M = 0).
double tail_bound(const TailProfile& tail, const BracketParams& p, HalfInteger s,
                  std::size_t terms, mpfr_prec_t bits) {
  const Real weight(alpha_weight_sum(p), bits);
  const Real constant = Real::from_double(tail.constant, bits) * weight;
  if (constant.is_zero()) return 0.0;
  const double f_part = tail.exponent_f + p.nu - s.to_double();
  const double q = f_part + tail.exponent_g;
  if (f_part > 0 || q >= -1) return std::numeric_limits<double>::infinity();
  const Real exponent = Real::from_double(q, bits) + Real(1, bits);  // q + 1 < 0
  const Real decay = -exponent;
  Real integral(bits);
  if (terms == 0) {
    integral = Real(1, bits) + Real(1, bits) / decay;
  } else {
    integral = pow(Real(static_cast<long>(terms), bits), exponent) / decay;
  }
  return (constant * integral).to_double(MPFR_RNDU);
}

}  // namespace

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::integral: return "integral";
    case CaseId::half_half: return "1";
    case CaseId::int_from_half_g: return "2";
    case CaseId::half_from_int_g: return "3";
  }
  return "?";
}

std::optional<CaseId> parse_case_id(std::string_view text) {
  if (text == "integral") return CaseId::integral;
  if (text == "1" || text == "half_half") return CaseId::half_half;
  if (text == "2" || text == "int_from_half_g") return CaseId::int_from_half_g;
  if (text == "3" || text == "half_from_int_g") return CaseId::half_from_int_g;
  return std::nullopt;
}

AdjointCase AdjointCase::make(CaseId id, TwiceWeight k, TwiceWeight l, int nu) {
  AdjointCase c{id, k, l, nu};
  if (nu < 0) throw std::invalid_argument("nu must be nonnegative");
  if (!parity_matches(id, k, l)) {
    throw std::invalid_argument("weights do not match case: " + describe(c));
  }
  return c;
}

AdjointCase AdjointCase::from_integer_parts(CaseId id, long k, long l, int nu) {
  const bool k_half = id == CaseId::half_half || id == CaseId::half_from_int_g;
  const bool l_half = id == CaseId::half_half || id == CaseId::int_from_half_g;
  return make(id, HalfInteger::from_twice(2 * k + (k_half ? 1 : 0)),
              HalfInteger::from_twice(2 * l + (l_half ? 1 : 0)), nu);
}

CaseParams case_params(const AdjointCase& c) {
  const auto k = HalfInteger::integer(c.k_part());
  const auto l = HalfInteger::integer(c.l_part());
  const auto two_nu = 2L * c.nu;
  const auto half = HalfInteger::half();
  CaseParams out;
  switch (c.id) {
    case CaseId::integral:
      out.gamma_s = k + l + two_nu - 1;
      out.beta_gamma_den = k - 1;
      out.n_exponent = k - 1;
      out.four_pi_exponent = l + two_nu;
      break;
    case CaseId::half_half:
      out.gamma_s = k + l + two_nu;
      out.beta_gamma_den = k - half;
      out.n_exponent = k - half;
      out.four_pi_exponent = l + two_nu + half;
      break;
    case CaseId::int_from_half_g:
      out.gamma_s = k + l + two_nu - half;
      out.beta_gamma_den = k - 1;
      out.n_exponent = k - 1;
      out.four_pi_exponent = l + two_nu + half;
      break;
    case CaseId::half_from_int_g:
      out.gamma_s = k + l + two_nu - half;
      out.beta_gamma_den = k - half;
      out.n_exponent = k - half;
      out.four_pi_exponent = l + two_nu;
      break;
  }
  out.beta_gamma_num = out.gamma_s;
  return out;
}

HypothesisCheck validate_hypotheses(const AdjointCase& c, bool g_is_cusp) {
  const auto k = HalfInteger::integer(c.k_part());
  const auto l = HalfInteger::integer(c.l_part());
  const std::string have = " (k=" + k.str() + ", l=" + l.str() + ")";
  HypothesisCheck out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.violated = std::move(why) + have;
  };
  switch (c.id) {
    case CaseId::integral:
      if (k < HalfInteger::integer(6)) {
        fail("integral case requires k >= 6");
      } else if (!g_is_cusp && !(l < k - 3)) {
        fail("integral case with non-cusp g requires l < k - 3");
      }
      break;
    case CaseId::half_half:
      if (g_is_cusp ? !(k > HalfInteger::integer(2)) : !(l < k - HalfInteger::from_twice(3))) {
        fail(g_is_cusp ? "case 1 with cusp g requires k > 2"
                       : "case 1 with non-cusp g requires l < k - 3/2");
      }
      break;
    case CaseId::int_from_half_g:
    case CaseId::half_from_int_g:
      if (g_is_cusp ? !(k > HalfInteger::integer(3)) : !(l < k - 2)) {
        fail(std::string("case ") + std::string(to_string(c.id)) +
             (g_is_cusp ? " with cusp g requires k > 3" : " with non-cusp g requires l < k - 2"));
      }
      break;
  }
  return out;
}

Real gamma_half_integer(HalfInteger x, mpfr_prec_t bits) {
  if (x <= HalfInteger{}) {
    throw std::domain_error("Gamma evaluated at nonpositive argument " + x.str());
  }
  Real out(gamma_rational_part(x), bits);
  if (!x.is_integral()) out *= sqrt(Real::pi(bits));
  return out;
}

Real beta_value(const AdjointCase& c, long n, mpfr_prec_t bits) {
  if (n < 1) throw std::invalid_argument("beta_value requires n >= 1");
  const CaseParams cp = case_params(c);
  const Real four_pi = Real(4, bits) * Real::pi(bits);
  return gamma_half_integer(cp.beta_gamma_num, bits) * pow(Real(n, bits), cp.n_exponent) /
         (gamma_half_integer(cp.beta_gamma_den, bits) * pow(four_pi, cp.four_pi_exponent));
}

double lemma_exponent(const FormMeta& meta) {
  const double k = meta.weight.to_double();
  const double e = meta.cusp_at_infinity ? k / 2.0 - 0.25 : k - 1.0;
  return std::max(e, 0.0);
}

GrowthBound fit_tail_profile(const QSeries& series, double lemma_exp, double epsilon) {
  if (series.precision() < 10) {
    throw std::invalid_argument("fit_tail_profile needs at least 10 coefficients");
  }
  constexpr mpfr_prec_t kBits = 128;
  GrowthBound out{lemma_exp + epsilon, 0.0};
  const Real exponent = Real::from_double(out.exponent, kBits);
  const Real den(series.denominator(), kBits);
  const auto nums = series.numerators();
  Real best(kBits);
  for (std::size_t n = 1; n < nums.size(); ++n) {
    if (nums[n] == 0) continue;
    const Real ratio =
        abs(Real(nums[n], kBits)) / (den * pow(Real(static_cast<long>(n), kBits), exponent));
    if (ratio > best) best = ratio;
  }
  out.constant = best.to_double(MPFR_RNDU);
  return out;
}

TailProfile make_tail_profile(const QSeries& f, const QSeries& g, double epsilon) {
  if (!f.meta() || !g.meta()) {
    throw std::invalid_argument("tail profile needs weight metadata on both series");
  }
  const auto bf = fit_tail_profile(f, lemma_exponent(*f.meta()), epsilon);
  const auto bg = fit_tail_profile(g, lemma_exponent(*g.meta()), epsilon);
  return TailProfile{bf.exponent, bg.exponent, bf.constant * bg.constant};
}

int precision_digits_from_env() {
  const char* raw = std::getenv("RC_ADJOINT_PRECISION_DIGITS");
  if (raw == nullptr || *raw == '\0') return 50;
  char* end = nullptr;
  const long digits = std::strtol(raw, &end, 10);
  if (*end != '\0' || digits < 16 || digits > 100000) {
    throw std::invalid_argument("RC_ADJOINT_PRECISION_DIGITS must be an integer >= 16, got '" +
                                std::string(raw) + "'");
  }
  return static_cast<int>(digits);
}

LValue l_series_value(const QSeries& f, const QSeries& g, const BracketParams& p, long n,
                      HalfInteger s, std::size_t terms, const TailProfile& tail,
                      int precision_digits) {
  if (n < 1) throw std::invalid_argument("l_series_value requires n >= 1");
  const std::size_t need_f = static_cast<std::size_t>(n) + terms + 1;
  if (f.precision() < need_f) {
    throw std::invalid_argument("f needs precision >= " + std::to_string(need_f) + ", has " +
                                std::to_string(f.precision()));
  }
  if (g.precision() < terms + 1) {
    throw std::invalid_argument("g needs precision >= " + std::to_string(terms + 1) + ", has " +
                                std::to_string(g.precision()));
  }
  const mpfr_prec_t bits = bits_for_digits(precision_digits);
  const LSeriesEvaluator eval(f, g, p, s, need_f - 1, terms, bits);
  return LValue{eval.partial_sum(n, terms), eval.boundary(n), terms,
                tail_bound(tail, p, s, terms, bits), s};
}

LValue l_series_value(const QSeries& f, const QSeries& g, const BracketParams& p, long n,
                      HalfInteger s, std::size_t terms) {
  return l_series_value(f, g, p, n, s, terms, make_tail_profile(f, g, 0.1),
                        precision_digits_from_env());
}

AdjointResult adjoint_coefficients(const QSeries& f, const QSeries& g, const AdjointCase& c,
                                   long n_max, std::size_t terms, const AdjointOptions& options) {
  AdjointResult out;
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (f.numerators().front() != 0) {
    throw std::invalid_argument("f must be a cusp form (a(0) = 0)");
  }
  if (f.meta() && f.meta()->weight != c.target_weight()) {
    throw std::invalid_argument("f has weight " + f.meta()->weight.str() + " but " +
                                describe(c) + " maps into weight " + c.target_weight().str());
  }
  if (g.meta() && g.meta()->weight != c.l) {
    throw std::invalid_argument("g has weight " + g.meta()->weight.str() + " but " +
                                describe(c) + " needs " + c.l.str());
  }
  const bool g_is_cusp = g.meta() ? g.meta()->cusp_at_infinity : g.numerators().front() == 0;
  if (auto check = validate_hypotheses(c, g_is_cusp); !check.ok) {
    out.warnings.push_back("hypothesis not satisfied: " + check.violated);
  }

  const auto lemma_f = options.lemma_exponent_f
                           ? *options.lemma_exponent_f
                           : (f.meta() ? lemma_exponent(*f.meta())
                                       : throw std::invalid_argument(
                                             "f lacks metadata; give its growth exponent"));
  const auto lemma_g = options.lemma_exponent_g
                           ? *options.lemma_exponent_g
                           : (g.meta() ? lemma_exponent(*g.meta())
                                       : throw std::invalid_argument(
                                             "g lacks metadata; give its growth exponent"));
  const auto bf = fit_tail_profile(f, lemma_f, options.epsilon);
  const auto bg = fit_tail_profile(g, lemma_g, options.epsilon);
  out.tail = TailProfile{bf.exponent, bg.exponent, bf.constant * bg.constant};
  if (n_max == 0) return out;

  const std::size_t need_f = static_cast<std::size_t>(n_max) + terms + 1;
  if (f.precision() < need_f) {
    throw std::invalid_argument("f needs precision >= " + std::to_string(need_f) + ", has " +
                                std::to_string(f.precision()));
  }
  if (g.precision() < terms + 1) {
    throw std::invalid_argument("g needs precision >= " + std::to_string(terms + 1) + ", has " +
                                std::to_string(g.precision()));
  }

  const CaseParams cp = case_params(c);
  const mpfr_prec_t bits = bits_for_digits(options.precision_digits);
  const BracketParams p = c.bracket();
  const LSeriesEvaluator eval(f, g, p, cp.gamma_s, need_f - 1, terms, bits);
  const double tail = tail_bound(out.tail, p, cp.gamma_s, terms, bits);
  if (std::isinf(tail)) {
    out.warnings.push_back("tail bound does not converge at s = " + cp.gamma_s.str() +
                           "; error bounds are infinite");
  }
  for (long n = 1; n <= n_max; ++n) {
    Real l_value = eval.partial_sum(n, terms);
    if (options.include_constant_term) l_value += eval.boundary(n);
    const Real beta = beta_value(c, n, bits);
    const double err = std::isinf(tail) ? tail : (beta * Real::from_double(tail, bits)).to_double(MPFR_RNDU);
    out.coefficients.push_back({n, (beta * l_value).to_double(), err});
  }
  return out;
}

}  // namespace rcadj
