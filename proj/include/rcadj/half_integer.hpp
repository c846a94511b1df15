#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "rcadj/rational.hpp"

namespace rcadj {

// An element of (1/2)Z stored as twice its value, so weights such as 13/2 and
// exponents such as k - 1/2 are exact.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(std::int64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger integer(std::int64_t value) { return from_twice(2 * value); }
  static constexpr HalfInteger half() { return from_twice(1); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }
  // Largest integer <= value.
  constexpr std::int64_t floor() const {
    return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
  }

  Rational to_rational() const {
    Rational r(twice_, 2);
    r.canonicalize();
    return r;
  }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string str() const;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInteger operator+(HalfInteger a, std::int64_t b) {
    return from_twice(a.twice_ + 2 * b);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, std::int64_t b) {
    return from_twice(a.twice_ - 2 * b);
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  std::int64_t twice_ = 0;
};

// Weight k of a modular form, k in (1/2)Z.
using TwiceWeight = HalfInteger;

inline std::string HalfInteger::str() const {
  if (is_integral()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace rcadj
