#include "rcadj/convolution.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <optional>
#include <stdexcept>

namespace rcadj::convolution {

namespace {

__extension__ typedef __int128 Int128;

std::size_t count_nonzero(std::span<const Integer> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; }));
}

std::size_t max_bits(std::span<const Integer> v) {
  std::size_t bits = 0;
  for (const auto& x : v) {
    if (x != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

// Sum over i of |v_i| 2^(i * limbs_per_slot * GMP_NUMB_BITS), restricted to
// entries with the given sign.
Integer pack(std::span<const Integer> v, int sign, std::size_t limbs_per_slot) {
  Integer z;
  const std::size_t total = v.size() * limbs_per_slot;
  if (total == 0) return z;
  mp_limb_t* out = mpz_limbs_write(z.get_mpz_t(), static_cast<mp_size_t>(total));
  std::fill(out, out + total, mp_limb_t{0});
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != sign) continue;
    const std::size_t n = mpz_size(v[i].get_mpz_t());
    const mp_limb_t* src = mpz_limbs_read(v[i].get_mpz_t());
    std::copy(src, src + n, out + i * limbs_per_slot);
  }
  mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(total));
  return z;
}

// Reads `count` balanced digits of width limbs_per_slot * GMP_NUMB_BITS.
Coeffs unpack_balanced(const Integer& value, std::size_t count, std::size_t limbs_per_slot) {
  Coeffs out(count);
  const bool negative = value < 0;
  const std::size_t size = mpz_size(value.get_mpz_t());
  const mp_limb_t* limbs = mpz_limbs_read(value.get_mpz_t());
  const std::size_t slot_bits = limbs_per_slot * GMP_NUMB_BITS;
  Integer full;
  mpz_setbit(full.get_mpz_t(), slot_bits);
  Integer half;
  mpz_setbit(half.get_mpz_t(), slot_bits - 1);

  std::vector<mp_limb_t> buf(limbs_per_slot);
  int carry = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t begin = i * limbs_per_slot;
    for (std::size_t j = 0; j < limbs_per_slot; ++j) {
      buf[j] = begin + j < size ? limbs[begin + j] : mp_limb_t{0};
    }
    mpz_t view;
    Integer digit(mpz_roinit_n(view, buf.data(), static_cast<mp_size_t>(limbs_per_slot)));
    digit += carry;
    if (digit >= half) {
      digit -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    if (negative) digit = -digit;
    out[i] = std::move(digit);
  }
  return out;
}

bool fits_int64(const Integer& x) {
  return mpz_fits_slong_p(x.get_mpz_t()) != 0 && sizeof(long) == sizeof(std::int64_t);
}

// 128-bit Miller recurrence. Returns nullopt as soon as an intermediate value
// leaves the representable range.
std::optional<std::vector<std::int64_t>> power_int64(
    const std::vector<std::pair<std::size_t, std::int64_t>>& terms, std::int64_t e,
    std::size_t length) {
  std::vector<std::int64_t> a(length, 0);
  a[0] = 1;
  for (std::size_t n = 1; n < length; ++n) {
    Int128 acc = 0;
    for (const auto& [k, pk] : terms) {
      if (k > n) break;
      const Int128 weight = static_cast<Int128>(e + 1) * static_cast<Int128>(k) -
                            static_cast<Int128>(n);
      Int128 term;
      if (__builtin_mul_overflow(weight, static_cast<Int128>(pk), &term)) return std::nullopt;
      if (__builtin_mul_overflow(term, static_cast<Int128>(a[n - k]), &term)) return std::nullopt;
      if (__builtin_add_overflow(acc, term, &acc)) return std::nullopt;
    }
    const Int128 q = acc / static_cast<Int128>(n);
    if (q > std::numeric_limits<std::int64_t>::max() ||
        q < std::numeric_limits<std::int64_t>::min()) {
      return std::nullopt;
    }
    a[n] = static_cast<std::int64_t>(q);
  }
  return a;
}

}  // namespace

Coeffs schoolbook(std::span<const Integer> a, std::span<const Integer> b) {
  const std::size_t n = std::min(a.size(), b.size());
  Coeffs c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

Coeffs sparse(std::span<const Integer> a, std::span<const Integer> b) {
  const std::size_t n = std::min(a.size(), b.size());
  a = a.first(n);
  b = b.first(n);
  if (count_nonzero(a) > count_nonzero(b)) std::swap(a, b);
  Coeffs c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

Coeffs kronecker(std::span<const Integer> a, std::span<const Integer> b) {
  const std::size_t n = std::min(a.size(), b.size());
  a = a.first(n);
  b = b.first(n);
  const std::size_t bits_a = max_bits(a);
  const std::size_t bits_b = max_bits(b);
  if (n == 0 || bits_a == 0 || bits_b == 0) return Coeffs(n);

  // |c_i| <= n 2^(bits_a + bits_b) must stay below half a slot.
  const std::size_t needed = bits_a + bits_b + std::bit_width(n) + 2;
  const std::size_t limbs_per_slot = (needed + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  const Integer pa = pack(a, 1, limbs_per_slot) - pack(a, -1, limbs_per_slot);
  const Integer pb = pack(b, 1, limbs_per_slot) - pack(b, -1, limbs_per_slot);
  const Integer product = pa * pb;
  return unpack_balanced(product, n, limbs_per_slot);
}

Coeffs multiply(std::span<const Integer> a, std::span<const Integer> b) {
  const std::size_t n = std::min(a.size(), b.size());
  const std::size_t fill = std::min(count_nonzero(a.first(n)), count_nonzero(b.first(n)));
  // Sparse multiplication costs about fill * n limb operations; Kronecker is
  // roughly linear in the packed size once n is beyond schoolbook range.
  constexpr std::size_t kDenseThreshold = 64;
  if (n <= kDenseThreshold || fill <= kDenseThreshold) return sparse(a, b);
  return kronecker(a, b);
}

Coeffs power(std::span<const Integer> p, std::int64_t e, std::size_t length) {
  if (p.empty() || p[0] != 1) {
    throw std::invalid_argument("power: series must have constant term 1");
  }
  if (length == 0) return {};
  std::vector<std::pair<std::size_t, std::int64_t>> small_terms;
  bool all_small = true;
  for (std::size_t k = 1; k < std::min(p.size(), length); ++k) {
    if (p[k] == 0) continue;
    if (!fits_int64(p[k])) {
      all_small = false;
      break;
    }
    small_terms.emplace_back(k, p[k].get_si());
  }
  if (p.size() < length) {
    throw std::invalid_argument("power: base series shorter than requested length");
  }

  if (all_small) {
    if (auto fast = power_int64(small_terms, e, length)) {
      Coeffs out(length);
      for (std::size_t i = 0; i < length; ++i) out[i] = static_cast<long>((*fast)[i]);
      return out;
    }
  }

  std::vector<std::size_t> support;
  for (std::size_t k = 1; k < length; ++k) {
    if (p[k] != 0) support.push_back(k);
  }
  Coeffs a(length);
  a[0] = 1;
  const Integer exponent_plus_one(static_cast<long>(e + 1));
  Integer acc;
  Integer weight;
  Integer term;
  for (std::size_t n = 1; n < length; ++n) {
    acc = 0;
    for (std::size_t k : support) {
      if (k > n) break;
      weight = exponent_plus_one * static_cast<unsigned long>(k);
      weight -= static_cast<unsigned long>(n);
      term = weight * p[k];
      mpz_addmul(acc.get_mpz_t(), term.get_mpz_t(), a[n - k].get_mpz_t());
    }
    mpz_divexact_ui(a[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return a;
}

}  // namespace rcadj::convolution
