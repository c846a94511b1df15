#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcadj/qseries.hpp"

namespace rcadj {

// A named form and how to expand it to a given precision.
struct FormDescriptor {
  std::string name;
  std::string description;
  QSeries (*build)(std::size_t precision);
};

// theta, delta, delta_4_6, E4, E6.
std::span<const FormDescriptor> catalog();

// A catalog name or a linear combination of names with rational
// coefficients, e.g. "E4", "2*E4 - 3/2*E6", "delta + delta_4_6".
// Throws std::invalid_argument for unknown names or malformed expressions.
QSeries catalog_get(std::string_view name, std::size_t precision);

// a(0) == 0. Only the cusp at infinity is examined.
bool check_cusp_at_infinity(const QSeries& f);

// For each pair (m, n) with gcd 1, whether a(m) a(n) == a(mn). Requires
// a(1) == 1 (std::invalid_argument) and mn < precision (std::out_of_range).
std::vector<bool> check_hecke_multiplicativity(
    const QSeries& f, std::span<const std::pair<std::size_t, std::size_t>> pairs);

}  // namespace rcadj
