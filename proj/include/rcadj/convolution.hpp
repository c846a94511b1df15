#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rcadj/rational.hpp"

// Exact truncated products and powers of integer coefficient sequences.
// All results have length min(a.size(), b.size()) (for products) and are
// independent of which kernel computed them.
namespace rcadj::convolution {

using Coeffs = std::vector<Integer>;

// Reference O(n^2) product; no shortcuts.
Coeffs schoolbook(std::span<const Integer> a, std::span<const Integer> b);

// Iterates over the nonzero entries of the sparser factor only.
Coeffs sparse(std::span<const Integer> a, std::span<const Integer> b);

// Kronecker substitution: evaluates both inputs at 2^w for a slot width w
// large enough that every product coefficient fits in a balanced w-bit digit,
// multiplies the two big integers once, and reads the digits back.
Coeffs kronecker(std::span<const Integer> a, std::span<const Integer> b);

// Picks sparse() or kronecker() from the sizes and fill of the inputs.
Coeffs multiply(std::span<const Integer> a, std::span<const Integer> b);

// First `length` coefficients of p^e for any integer e, via the J.C.P. Miller
// recurrence n a_n = sum_{k=1}^{n} ((e+1)k - n) p_k a_{n-k}. Requires p[0] = 1.
// Runs in 128-bit arithmetic while values allow it and in GMP otherwise.
Coeffs power(std::span<const Integer> p, std::int64_t e, std::size_t length);

}  // namespace rcadj::convolution
