#include "rcadj/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rcadj/adjoint.hpp"
#include "rcadj/bracket.hpp"
#include "rcadj/forms.hpp"
#include "rcadj/series_json.hpp"
#include "rcadj/verify.hpp"

namespace rcadj::cli {

namespace {

using nlohmann::ordered_json;

// Flags of the adjoint-type commands.
struct AdjointFlags {
  std::string case_name;
  std::string f;
  std::vector<std::string> f_product;
  std::string g;
  int nu = 0;
  long n_max = 10;
  std::size_t terms = 20000;
  double epsilon = 0.1;
  bool omit_constant_term = false;
  std::string basis;
  double tolerance = 1e-3;
};

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// A series file when the path exists, otherwise a catalog expression.
QSeries load_form(const std::string& name, std::size_t precision) {
  if (!name.empty() && std::filesystem::is_regular_file(name)) {
    return read_series_file(name);
  }
  return catalog_get(name, precision);
}

QSeries load_f(const AdjointFlags& a, std::size_t precision) {
  if (!a.f_product.empty()) {
    return series_mul(load_form(a.f_product[0], precision), load_form(a.f_product[1], precision));
  }
  if (a.f.empty()) throw std::invalid_argument("one of --f or --f-product is required");
  return load_form(a.f, precision);
}

std::string f_label(const AdjointFlags& a) {
  return a.f_product.empty() ? a.f : a.f_product[0] + "*" + a.f_product[1];
}

// --basis, or the factor of --f-product that is not g.
std::string basis_name(const AdjointFlags& a) {
  if (!a.basis.empty()) return a.basis;
  if (a.f_product.size() == 2) {
    if (a.f_product[1] == a.g) return a.f_product[0];
    if (a.f_product[0] == a.g) return a.f_product[1];
  }
  throw std::invalid_argument("--basis is required unless --f-product A B has g as a factor");
}

void check_ranges(const AdjointFlags& a) {
  if (a.nu < 0) throw CLI::ValidationError("--nu", "must be >= 0");
  if (a.n_max < 0) throw CLI::ValidationError("--n-max", "must be >= 0");
  if (!(a.epsilon > 0)) throw CLI::ValidationError("--epsilon", "must be > 0");
  if (!(a.tolerance >= 0)) throw CLI::ValidationError("--tolerance", "must be >= 0");
}

CaseId case_from_flag(const std::string& text) {
  auto id = parse_case_id(text);
  if (!id) throw CLI::ValidationError("--case", "expected integral, 1, 2 or 3");
  return *id;
}

struct Prepared {
  QSeries f;
  QSeries g;
  AdjointCase c;
  AdjointOptions options;
};

// Expands f and g far enough for n <= n_max with `terms` terms and infers
// the domain weight k = weight(f) - weight(g) - 2 nu.
Prepared prepare(const AdjointFlags& a) {
  const CaseId id = case_from_flag(a.case_name);
  const std::size_t f_precision = static_cast<std::size_t>(a.n_max) + a.terms + 1;
  const std::size_t g_precision = std::max<std::size_t>(a.terms + 1, 10);
  QSeries f = load_f(a, std::max<std::size_t>(f_precision, 10));
  QSeries g = load_form(a.g, g_precision);
  if (!f.meta() || !g.meta()) {
    throw std::invalid_argument("f and g need weight metadata (catalog forms or series files "
                                "with twice_weight, level and character)");
  }
  const TwiceWeight l = g.meta()->weight;
  const TwiceWeight k = f.meta()->weight - l - 2L * a.nu;
  if (k <= HalfInteger{}) {
    throw std::invalid_argument("weight of f is too small for g and nu: k = " + k.str());
  }
  AdjointOptions options;
  options.epsilon = a.epsilon;
  options.precision_digits = precision_digits_from_env();
  options.include_constant_term = !a.omit_constant_term;
  return Prepared{std::move(f), std::move(g), AdjointCase::make(id, k, l, a.nu), options};
}

ordered_json config_json(const AdjointFlags& a, const Prepared& p) {
  ordered_json j;
  j["case"] = std::string(to_string(p.c.id));
  j["f"] = f_label(a);
  j["g"] = a.g;
  j["k"] = p.c.k.str();
  j["l"] = p.c.l.str();
  j["nu"] = a.nu;
  j["n_max"] = a.n_max;
  j["terms"] = a.terms;
  j["epsilon"] = a.epsilon;
  j["constant_term"] = p.options.include_constant_term;
  j["precision_digits"] = p.options.precision_digits;
  return j;
}

void report_warnings(const AdjointResult& r, std::ostream& err) {
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
}

ordered_json series_json_out(const QSeries& s) { return series_to_json(s); }

int cmd_expand(const std::string& form, std::size_t precision, std::ostream& out) {
  out << series_json_out(load_form(form, precision)).dump(2) << '\n';
  return kOk;
}

int cmd_bracket(const AdjointFlags& a, std::size_t precision, std::ostream& out) {
  if (a.nu < 0) throw CLI::ValidationError("--nu", "must be >= 0");
  const QSeries f = load_f(a, precision);
  const QSeries g = load_form(a.g, precision);
  out << series_json_out(rc_bracket(f, g, a.nu)).dump(2) << '\n';
  return kOk;
}

int cmd_adjoint(const AdjointFlags& a, const std::string& format, std::ostream& out,
                std::ostream& err) {
  check_ranges(a);
  const Prepared p = prepare(a);
  const AdjointResult r = adjoint_coefficients(p.f, p.g, p.c, a.n_max, a.terms, p.options);
  report_warnings(r, err);
  err << "tail: C_f*C_g = " << format_g17(r.tail.constant) << ", e_f = " << r.tail.exponent_f
      << ", e_g = " << r.tail.exponent_g << '\n';
  if (format == "csv") {
    out << "n,c_n,err_bound\n";
    for (const auto& c : r.coefficients) {
      out << c.n << ',' << format_g17(c.value) << ',' << format_g17(c.err) << '\n';
    }
    return kOk;
  }
  ordered_json j;
  j["config"] = config_json(a, p);
  j["coefficients"] = ordered_json::array();
  for (const auto& c : r.coefficients) {
    j["coefficients"].push_back({{"n", c.n}, {"c_n", c.value}, {"err_bound", c.err}});
  }
  j["tail"] = {{"exponent_f", r.tail.exponent_f},
               {"exponent_g", r.tail.exponent_g},
               {"constant", r.tail.constant}};
  j["warnings"] = r.warnings;
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify_ratio(const AdjointFlags& a, std::ostream& out, std::ostream& err) {
  check_ranges(a);
  const Prepared p = prepare(a);
  const std::string basis = basis_name(a);
  const QSeries basis_series = load_form(basis, static_cast<std::size_t>(a.n_max) + 1);
  const AdjointResult r = adjoint_coefficients(p.f, p.g, p.c, a.n_max, a.terms, p.options);
  report_warnings(r, err);
  const RatioReport rep = ratio_test(r.coefficients, basis_series, a.tolerance);
  ordered_json j;
  j["config"] = config_json(a, p);
  j["config"]["basis"] = basis;
  j["lambda"] = rep.lambda;
  j["spread"] = rep.spread;
  j["error_budget"] = rep.error_budget;
  j["pass"] = rep.pass;
  j["M"] = a.terms;
  j["tolerance"] = rep.tolerance;
  j["ratios"] = ordered_json::array();
  for (const auto& [n, ratio] : rep.ratios) j["ratios"].push_back({{"n", n}, {"ratio", ratio}});
  out << j.dump(2) << '\n';
  return rep.pass ? kOk : kVerificationFailed;
}

// Certifies lambda > 0: passes when lambda exceeds its error bound.
int cmd_verify_lambda(AdjointFlags a, std::ostream& out, std::ostream& err) {
  check_ranges(a);
  const std::string basis = basis_name(a);
  const CaseId id = case_from_flag(a.case_name);
  const std::size_t probe = std::max<std::size_t>(a.terms + 2, 10);
  const QSeries basis_short = load_form(basis, probe);
  const long m0 = first_nonzero_index(basis_short);
  const std::size_t precision = static_cast<std::size_t>(m0) + a.terms + 1;
  const QSeries b = load_form(basis, std::max(precision, probe));
  const QSeries g = load_form(a.g, std::max(precision, probe));
  if (!b.meta() || !g.meta()) throw std::invalid_argument("basis and g need weight metadata");
  const AdjointCase c = AdjointCase::make(id, b.meta()->weight, g.meta()->weight, a.nu);
  AdjointOptions options;
  options.epsilon = a.epsilon;
  options.precision_digits = precision_digits_from_env();
  options.include_constant_term = !a.omit_constant_term;
  if (auto h = validate_hypotheses(c, g.meta()->cusp_at_infinity); !h.ok) {
    err << "warning: hypothesis not satisfied: " << h.violated << '\n';
  }
  const LambdaEstimate est = lambda_from_first_coefficient(c, b, g, m0, a.terms, options);
  const bool pass = est.lambda > est.err;
  ordered_json j;
  j["config"] = {{"case", std::string(to_string(c.id))},
                 {"basis", basis},
                 {"g", a.g},
                 {"k", c.k.str()},
                 {"l", c.l.str()},
                 {"nu", a.nu},
                 {"terms", a.terms},
                 {"epsilon", a.epsilon},
                 {"constant_term", options.include_constant_term},
                 {"precision_digits", options.precision_digits}};
  j["lambda"] = est.lambda;
  j["error_budget"] = est.err;
  j["m0"] = est.m0;
  j["pass"] = pass;
  j["M"] = a.terms;
  out << j.dump(2) << '\n';
  return pass ? kOk : kVerificationFailed;
}

int cmd_verify_rewritten(std::size_t terms, std::ostream& out) {
  const RewrittenSums sums = rewritten_sum_report(terms, precision_digits_from_env());
  const bool pass = terms == 0 || sums.faithful > 0;
  ordered_json j;
  j["M"] = terms;
  j["faithful_sum"] = sums.faithful;
  j["rewritten_sum"] = sums.rewritten;
  j["pass"] = pass;
  out << j.dump(2) << '\n';
  return pass ? kOk : kVerificationFailed;
}

void add_adjoint_flags(CLI::App* app, AdjointFlags& a, bool with_f) {
  app->add_option("--case", a.case_name, "integral, 1, 2 or 3")->required();
  if (with_f) {
    auto* f = app->add_option("--f", a.f, "catalog expression or series file");
    auto* fp = app->add_option("--f-product", a.f_product, "f = A*B")->expected(2);
    f->excludes(fp);
    fp->excludes(f);
  }
  app->add_option("--g", a.g, "catalog expression or series file")->required();
  app->add_option("--nu", a.nu, "bracket order")->required();
  app->add_option("--terms", a.terms, "terms M of each L-series")->capture_default_str();
  app->add_option("--epsilon", a.epsilon, "growth exponent slack")->capture_default_str();
  app->add_flag("--omit-constant-term", a.omit_constant_term,
                "drop the m = 0 term a(n) b(0) alpha(n, 0) / n^gamma");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rankin-Cohen brackets and adjoint coefficients of modular forms", "rcadj"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "write data output to this file");

  std::string form;
  std::size_t precision = 0;
  auto* expand = app.add_subcommand("expand", "print a q-expansion as JSON");
  expand->add_option("--form", form, "catalog expression")->required();
  expand->add_option("--precision", precision, "number of coefficients")->required();

  AdjointFlags flags;
  std::size_t bracket_precision = 50;
  auto* bracket = app.add_subcommand("bracket", "print [f, g]_nu as JSON");
  {
    auto* f = bracket->add_option("--f", flags.f, "catalog expression or series file");
    auto* fp = bracket->add_option("--f-product", flags.f_product, "f = A*B")->expected(2);
    f->excludes(fp);
    fp->excludes(f);
    bracket->add_option("--g", flags.g, "catalog expression or series file")->required();
    bracket->add_option("--nu", flags.nu, "bracket order")->required();
    bracket->add_option("--precision", bracket_precision, "number of coefficients")
        ->capture_default_str();
  }

  std::string format = "json";
  auto* adjoint = app.add_subcommand("adjoint", "adjoint coefficients c(n), n = 1..n_max");
  add_adjoint_flags(adjoint, flags, true);
  adjoint->add_option("--n-max", flags.n_max, "largest n")->required();
  adjoint->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "verification reports");
  verify->require_subcommand(1);
  auto* ratio = verify->add_subcommand("ratio", "proportionality of c(n) to a basis form");
  add_adjoint_flags(ratio, flags, true);
  ratio->add_option("--n-max", flags.n_max, "largest n")->capture_default_str();
  ratio->add_option("--basis", flags.basis, "generator of the domain space");
  ratio->add_option("--tolerance", flags.tolerance, "relative spread tolerance")
      ->capture_default_str();
  auto* lambda = verify->add_subcommand("lambda", "lambda from the first coefficient");
  add_adjoint_flags(lambda, flags, true);
  lambda->add_option("--basis", flags.basis, "generator of the domain space");

  std::size_t rewritten_terms = 1000;
  auto* rewritten = verify->add_subcommand("rewritten", "faithful and rewritten positivity sums");
  rewritten->add_option("--terms", rewritten_terms, "M")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (expand->parsed()) {
      code = cmd_expand(form, precision, buffer);
    } else if (bracket->parsed()) {
      code = cmd_bracket(flags, bracket_precision, buffer);
    } else if (adjoint->parsed()) {
      code = cmd_adjoint(flags, format, buffer, err);
    } else if (ratio->parsed()) {
      code = cmd_verify_ratio(flags, buffer, err);
    } else if (lambda->parsed()) {
      code = cmd_verify_lambda(flags, buffer, err);
    } else if (rewritten->parsed()) {
      code = cmd_verify_rewritten(rewritten_terms, buffer);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << output << '\n';
      return kUsage;
    }
  }
  return code;
}

}  // namespace rcadj::cli
