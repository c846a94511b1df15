#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcadj/bracket.hpp"
#include "rcadj/qseries.hpp"
#include "rcadj/real.hpp"

namespace rcadj {

// Weight configurations of T_{g,nu}: h -> [h, g]_nu on S_k.
//   integral         : k, l integral            (level 1)
//   half_half        : k, l in Z + 1/2          (case 1)
//   int_from_half_g  : k integral, l in Z + 1/2 (case 2)
//   half_from_int_g  : k in Z + 1/2, l integral (case 3)
enum class CaseId { integral, half_half, int_from_half_g, half_from_int_g };

std::string_view to_string(CaseId id);
// Accepts "integral", "1", "2", "3" and the enumerator names.
std::optional<CaseId> parse_case_id(std::string_view text);

// k is the weight of the domain S_k, l the weight of g; both are actual
// weights (13/2, not 6). The bracket kernel alpha is taken at these weights.
struct AdjointCase {
  CaseId id = CaseId::integral;
  TwiceWeight k;
  TwiceWeight l;
  int nu = 0;

  // Throws std::invalid_argument when the parities of k, l do not match id or
  // nu < 0.
  static AdjointCase make(CaseId id, TwiceWeight k, TwiceWeight l, int nu);
  // From integer parts: case 1 (k, l) means weights (k + 1/2, l + 1/2),
  // case 2 means (k, l + 1/2), case 3 means (k + 1/2, l).
  static AdjointCase from_integer_parts(CaseId id, long k, long l, int nu);

  BracketParams bracket() const { return {k, l, nu}; }
  TwiceWeight target_weight() const { return k + l + 2L * nu; }
  // Integer parts k, l as used by the case table.
  long k_part() const { return k.floor(); }
  long l_part() const { return l.floor(); }
};

// c(n) = beta(n) L(gamma) with
//   beta(n) = Gamma(beta_gamma_num) n^{n_exponent}
//             / (Gamma(beta_gamma_den) (4 pi)^{four_pi_exponent}).
struct CaseParams {
  HalfInteger gamma_s;
  HalfInteger beta_gamma_num;
  HalfInteger beta_gamma_den;
  HalfInteger n_exponent;
  HalfInteger four_pi_exponent;
};

CaseParams case_params(const AdjointCase& c);

struct HypothesisCheck {
  bool ok = true;
  // Empty when ok; otherwise the violated condition.
  std::string violated;
};

// Growth conditions under which the coefficient formula is proven. A failed
// check is a warning only; the computation still runs.
HypothesisCheck validate_hypotheses(const AdjointCase& c, bool g_is_cusp);

// Gamma(x) for x in (1/2)Z, x > 0, via Gamma(1/2) = sqrt(pi) and the exact
// rising product. Throws std::domain_error for x <= 0.
Real gamma_half_integer(HalfInteger x, mpfr_prec_t bits);

Real beta_value(const AdjointCase& c, long n, mpfr_prec_t bits);

// |a(n)| <= constant * n^exponent for 1 <= n < precision.
struct GrowthBound {
  double exponent = 0;
  double constant = 0;
};

// Exponent of the coefficient growth lemma for a form described by meta:
// k/2 - 1/4 for cusp forms and k - 1 otherwise (k the actual weight), floored
// at 0 since theta-type series of weight 1/2 have non-decaying coefficients.
double lemma_exponent(const FormMeta& meta);

// exponent = lemma_exponent + epsilon; constant = max over 1 <= n < precision
// of |a(n)| / n^exponent (0 for a series vanishing there), rounded up.
// Throws std::invalid_argument when precision < 10.
GrowthBound fit_tail_profile(const QSeries& series, double lemma_exponent, double epsilon);

struct TailProfile {
  double exponent_f = 0;
  double exponent_g = 0;
  // C_f * C_g
  double constant = 0;
};

// Both fits from the metadata-derived lemma exponents; throws when either
// series lacks metadata.
TailProfile make_tail_profile(const QSeries& f, const QSeries& g, double epsilon);

// Partial sum of L_{f,g,nu,n}(s) = sum_{m>=1} a(n+m) b(m) alpha(n,m) / (n+m)^s.
struct LValue {
  // sum over m = 1..terms_used
  Real value;
  // m = 0 term a(n) b(0) alpha(n, 0) / n^s of the unfolded sum
  Real boundary;
  std::size_t terms_used = 0;
  // Bound on |sum over m > terms_used|; +inf when the bound does not converge.
  double tail_bound = 0;
  HalfInteger s;

  Real total() const { return boundary + value; }
};

// Reads RC_ADJOINT_PRECISION_DIGITS (default 50, minimum 16).
int precision_digits_from_env();

// Requires f.precision() > n + terms and g.precision() > terms; the error
// message names the required precision. Coefficients are rational, so the
// conjugate of b(m) is b(m).
LValue l_series_value(const QSeries& f, const QSeries& g, const BracketParams& p, long n,
                      HalfInteger s, std::size_t terms, const TailProfile& tail,
                      int precision_digits);
LValue l_series_value(const QSeries& f, const QSeries& g, const BracketParams& p, long n,
                      HalfInteger s, std::size_t terms);

struct AdjointOptions {
  double epsilon = 0.1;
  int precision_digits = 50;
  // Add the m = 0 term a(n) b(0) alpha(n, 0) / n^gamma. It vanishes for cusp
  // forms g; for non-cusp g the coefficients are only proportional to an
  // eigenform when it is included.
  bool include_constant_term = true;
  // Override the metadata-derived lemma exponents.
  std::optional<double> lemma_exponent_f;
  std::optional<double> lemma_exponent_g;
};

struct AdjointCoefficient {
  long n = 0;
  double value = 0;
  // beta(n) * tail_bound
  double err = 0;
};

struct AdjointResult {
  std::vector<AdjointCoefficient> coefficients;
  std::vector<std::string> warnings;
  TailProfile tail;
};

// c(n) = beta(n) (L_n(gamma) [+ m = 0 term]) for n = 1..n_max using the first
// `terms` terms of each L-series. f must vanish at infinity; when metadata is
// present f must have weight k + l + 2nu and g weight l.
AdjointResult adjoint_coefficients(const QSeries& f, const QSeries& g, const AdjointCase& c,
                                   long n_max, std::size_t terms,
                                   const AdjointOptions& options = {});

}  // namespace rcadj
