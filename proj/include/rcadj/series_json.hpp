#pragma once

#include <filesystem>

#include <json.hpp>

#include "rcadj/qseries.hpp"

namespace rcadj {

// {"twice_weight": int|null, "level": int|null,
//  "character": "trivial"|"chi_minus4"|null, "precision": int,
//  "coeffs": ["p/q", ...]}
// Coefficients are decimal fractions in lowest terms ("p" when integral).
nlohmann::ordered_json series_to_json(const QSeries& s);

// Inverse of series_to_json. Metadata is restored when weight, level and
// character are all present; the cusp flag is re-derived from a(0) == 0.
// Throws std::invalid_argument on schema violations.
QSeries series_from_json(const nlohmann::json& j);

QSeries read_series_file(const std::filesystem::path& path);

}  // namespace rcadj
