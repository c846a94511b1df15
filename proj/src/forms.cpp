#include "rcadj/forms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rcadj {

namespace {

QSeries build_theta(std::size_t precision) { return make_theta(precision); }

QSeries build_delta(std::size_t precision) {
  const std::array<EtaFactor, 1> eta24{{{1, 24}}};
  return make_eta_product(eta24, precision,
                          FormMeta(TwiceWeight::integer(12), 1, CharacterMod4::trivial, true));
}

// The weight-6 newform on Gamma_0(4), realized as eta(2z)^12.
QSeries build_delta_4_6(std::size_t precision) {
  const std::array<EtaFactor, 1> eta2_12{{{2, 12}}};
  return make_eta_product(eta2_12, precision,
                          FormMeta(TwiceWeight::integer(6), 4, CharacterMod4::trivial, true));
}

QSeries build_e4(std::size_t precision) { return make_eisenstein(4, precision); }
QSeries build_e6(std::size_t precision) { return make_eisenstein(6, precision); }

const std::array<FormDescriptor, 5> kCatalog{{
    {"theta", "sum_{n in Z} q^{n^2}, weight 1/2, level 4", &build_theta},
    {"delta", "eta(z)^24, weight 12, level 1, cusp form", &build_delta},
    {"delta_4_6", "eta(2z)^12, weight 6, level 4, cusp form", &build_delta_4_6},
    {"E4", "Eisenstein series of weight 4", &build_e4},
    {"E6", "Eisenstein series of weight 6", &build_e6},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

QSeries build_atom(std::string_view name, std::size_t precision) {
  for (const auto& d : kCatalog) {
    if (d.name == name) return d.build(precision);
  }
  throw std::invalid_argument("unknown form '" + std::string(name) + "'");
}

// "[coefficient*]name"
std::pair<Rational, std::string_view> split_term(std::string_view term) {
  term = trim(term);
  const auto star = term.find('*');
  if (star == std::string_view::npos) return {Rational(1), term};
  return {parse_rational(trim(term.substr(0, star))), trim(term.substr(star + 1))};
}

}  // namespace

std::span<const FormDescriptor> catalog() { return kCatalog; }

QSeries catalog_get(std::string_view name, std::size_t precision) {
  if (precision == 0) throw std::invalid_argument("precision must be positive");
  const std::string_view expr = trim(name);
  if (expr.empty()) throw std::invalid_argument("empty form name");

  // Split on + and - that start a new term; a leading sign belongs to the
  // first term.
  std::vector<std::pair<int, std::string_view>> terms;
  int sign = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= expr.size(); ++i) {
    if (i == expr.size() || ((expr[i] == '+' || expr[i] == '-') && i > 0 &&
                             expr[i - 1] != '*' && expr[i - 1] != '/')) {
      const auto piece = trim(expr.substr(start, i - start));
      if (piece.empty()) {
        throw std::invalid_argument("malformed form expression '" + std::string(expr) + "'");
      }
      terms.emplace_back(sign, piece);
      if (i < expr.size()) {
        sign = expr[i] == '-' ? -1 : 1;
        start = i + 1;
      }
    }
  }
  if (!terms.empty() && terms.front().second.front() == '-') {
    terms.front().first = -terms.front().first;
    terms.front().second = terms.front().second.substr(1);
  }
  if (terms.size() == 1 && terms.front().first == 1 &&
      terms.front().second.find('*') == std::string_view::npos) {
    return build_atom(terms.front().second, precision);
  }

  std::optional<QSeries> sum;
  for (const auto& [s, text] : terms) {
    auto [c, atom] = split_term(text);
    if (atom.empty()) throw std::invalid_argument("malformed form expression '" +
                                                  std::string(expr) + "'");
    QSeries term = build_atom(atom, precision);
    c *= s;
    if (!sum) {
      sum = series_scale(term, c);
    } else {
      sum = series_add(*sum, term, Rational(1), c);
    }
  }
  if (!sum) throw std::invalid_argument("malformed form expression '" + std::string(expr) + "'");
  return *sum;
}

bool check_cusp_at_infinity(const QSeries& f) { return f.numerators().front() == 0; }

std::vector<bool> check_hecke_multiplicativity(
    const QSeries& f, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  if (f.precision() < 2 || f.coeff(1) != 1) {
    throw std::invalid_argument("Hecke check needs a normalized form with a(1) = 1");
  }
  std::vector<bool> out;
  out.reserve(pairs.size());
  for (const auto& [m, n] : pairs) {
    if (std::gcd(m, n) != 1) {
      throw std::invalid_argument("Hecke check pair (" + std::to_string(m) + ", " +
                                  std::to_string(n) + ") is not coprime");
    }
    out.push_back(f.coeff(m) * f.coeff(n) == f.coeff(m * n));
  }
  return out;
}

}  // namespace rcadj
