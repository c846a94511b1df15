#include "rcadj/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rcadj {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  // gmp rejects a leading '+'
  auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  Rational r;
  r.get_num() = Integer(strip_plus(num));
  r.get_den() = Integer(strip_plus(den));
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace rcadj
