#include "rcadj/series_json.hpp"

#include <fstream>
#include <stdexcept>

namespace rcadj {

nlohmann::ordered_json series_to_json(const QSeries& s) {
  nlohmann::ordered_json j;
  const auto& meta = s.meta();
  j["twice_weight"] = meta ? nlohmann::ordered_json(meta->weight.twice()) : nullptr;
  j["level"] = meta ? nlohmann::ordered_json(meta->level) : nullptr;
  j["character"] = meta ? nlohmann::ordered_json(std::string(to_string(meta->character))) : nullptr;
  j["precision"] = s.precision();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

QSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("series JSON must be an object");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("series JSON lacks a 'coeffs' array");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("coefficients must be strings like \"p/q\"");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  if (coeffs.empty()) throw std::invalid_argument("series JSON has no coefficients");
  if (j.contains("precision") && !j["precision"].is_null() &&
      j["precision"].get<std::size_t>() != coeffs.size()) {
    throw std::invalid_argument("series JSON 'precision' disagrees with number of coefficients");
  }

  auto present = [&](const char* key) { return j.contains(key) && !j[key].is_null(); };
  std::optional<FormMeta> meta;
  if (present("twice_weight") && present("level") && present("character")) {
    const auto chi = parse_character(j["character"].get<std::string>());
    if (!chi) throw std::invalid_argument("unknown character in series JSON");
    meta = FormMeta(TwiceWeight::from_twice(j["twice_weight"].get<std::int64_t>()),
                    j["level"].get<long>(), *chi, coeffs.front() == 0);
  }
  return QSeries(coeffs, meta);
}

QSeries read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open series file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
  }
  return series_from_json(j);
}

}  // namespace rcadj
