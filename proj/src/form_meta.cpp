#include "rcadj/form_meta.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rcadj {

int evaluate(CharacterMod4 chi, long d) {
  if (chi == CharacterMod4::trivial) return 1;
  const long r = ((d % 4) + 4) % 4;
  if (r == 1) return 1;
  if (r == 3) return -1;
  return 0;
}

CharacterMod4 operator*(CharacterMod4 a, CharacterMod4 b) {
  return a == b ? CharacterMod4::trivial : CharacterMod4::chi_minus4;
}

CharacterMod4 chi_minus4_power(long exponent) {
  return exponent % 2 == 0 ? CharacterMod4::trivial : CharacterMod4::chi_minus4;
}

std::string_view to_string(CharacterMod4 chi) {
  return chi == CharacterMod4::trivial ? "trivial" : "chi_minus4";
}

std::optional<CharacterMod4> parse_character(std::string_view text) {
  if (text == "trivial") return CharacterMod4::trivial;
  if (text == "chi_minus4") return CharacterMod4::chi_minus4;
  return std::nullopt;
}

FormMeta::FormMeta(TwiceWeight weight, long level, CharacterMod4 character, bool cusp_at_infinity)
    : weight(weight), level(level), character(character), cusp_at_infinity(cusp_at_infinity) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  if (!weight.is_integral() && level % 4 != 0) {
    throw std::invalid_argument("half-integral weight " + weight.str() +
                                " requires level divisible by 4, got " + std::to_string(level));
  }
}

bool FormMeta::same_space(const FormMeta& other) const {
  return weight == other.weight && level == other.level && character == other.character;
}

CharacterMod4 bracket_character_factor(TwiceWeight k, TwiceWeight l) {
  if (k.is_integral() && l.is_integral()) return CharacterMod4::trivial;
  if (k.is_integral()) return chi_minus4_power(k.floor());
  if (l.is_integral()) return chi_minus4_power(l.floor());
  return chi_minus4_power((k + l).floor());
}

FormMeta bracket_meta(const FormMeta& f, const FormMeta& g, int nu) {
  return FormMeta(f.weight + g.weight + 2L * nu, std::lcm(f.level, g.level),
                  f.character * g.character * bracket_character_factor(f.weight, g.weight),
                  nu > 0 || f.cusp_at_infinity || g.cusp_at_infinity);
}

}  // namespace rcadj
