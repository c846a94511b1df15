#pragma once

#include <optional>
#include <string_view>

#include "rcadj/half_integer.hpp"

namespace rcadj {

// Nebentypus of the forms in scope; every catalog form has level 1 or 4.
enum class CharacterMod4 { trivial, chi_minus4 };

// chi_minus4(d) = (-4/d): 0 for even d, +1 for d = 1 mod 4, -1 for d = 3 mod 4.
int evaluate(CharacterMod4 chi, long d);
CharacterMod4 operator*(CharacterMod4 a, CharacterMod4 b);
CharacterMod4 chi_minus4_power(long exponent);
std::string_view to_string(CharacterMod4 chi);
std::optional<CharacterMod4> parse_character(std::string_view text);

// Weight, level and character of the modular form a series expands.
struct FormMeta {
  TwiceWeight weight;
  long level = 1;
  CharacterMod4 character = CharacterMod4::trivial;
  bool cusp_at_infinity = false;

  // Throws std::invalid_argument unless level >= 1 and half-integral weights
  // sit on a level divisible by 4.
  FormMeta(TwiceWeight weight, long level, CharacterMod4 character, bool cusp_at_infinity);

  // Same (weight, level, character); the cusp flag is not part of the space.
  bool same_space(const FormMeta& other) const;

  friend bool operator==(const FormMeta&, const FormMeta&) = default;
};

// The extra character chi that the bracket [f, g]_nu of forms of weights k
// and l picks up: trivial when both weights are integral, chi_{-4}^k when
// only l is half-integral, chi_{-4}^l when only k is, chi_{-4}^{k+l} when both
// are.
CharacterMod4 bracket_character_factor(TwiceWeight k, TwiceWeight l);

// Metadata of [f, g]_nu: weight k + l + 2nu, lcm of the levels, character
// chi_f chi_g chi, and cuspidal when nu > 0 or either input is cuspidal.
FormMeta bracket_meta(const FormMeta& f, const FormMeta& g, int nu);

}  // namespace rcadj
