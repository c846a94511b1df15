#include <doctest.h>

#include "oracles.hpp"
#include "rcadj/convolution.hpp"

using namespace rcadj;
namespace conv = rcadj::convolution;

TEST_SUITE("convolution") {

TEST_CASE("kronecker and sparse agree with schoolbook") {
  std::mt19937_64 rng(11);
  for (int bits : {1, 5, 31, 64, 65, 200}) {
    for (std::size_t n : {1u, 2u, 17u, 150u}) {
      auto a = oracle::random_integers(rng, n, bits);
      auto b = oracle::random_integers(rng, n + 3, bits / 2 + 1);
      if (n > 2) a[1] = 0;
      const auto ref = conv::schoolbook(a, b);
      CHECK(ref.size() == n);
      CHECK(conv::kronecker(a, b) == ref);
      CHECK(conv::sparse(a, b) == ref);
      CHECK(conv::multiply(a, b) == ref);
    }
  }
}

TEST_CASE("kronecker handles zeros and extreme signs") {
  std::vector<Integer> a(300, 0);
  std::vector<Integer> b(300, 0);
  a[0] = -1;
  a[299] = Integer("-123456789012345678901234567890");
  b[0] = Integer("-98765432109876543210");
  b[150] = 1;
  CHECK(conv::kronecker(a, b) == conv::schoolbook(a, b));
  const std::vector<Integer> zeros(100, 0);
  CHECK(conv::kronecker(zeros, zeros) == zeros);
}

TEST_CASE("power matches repeated multiplication on both code paths") {
  std::mt19937_64 rng(5);
  for (int bits : {3, 90}) {
    auto p = oracle::random_integers(rng, 40, bits);
    p[0] = 1;
    for (std::int64_t e : {0, 1, 2, 5, -3}) {
      if (e < 0 && bits > 3) continue;
      std::vector<Integer> expected(40, 0);
      expected[0] = 1;
      if (e >= 0) {
        for (std::int64_t i = 0; i < e; ++i) expected = conv::schoolbook(expected, p);
      } else {
        // p^e q = 1 solved for q, then raised to -e
        std::vector<Integer> inv(40, 0);
        inv[0] = 1;
        for (std::size_t n = 1; n < 40; ++n) {
          Integer s = 0;
          for (std::size_t k = 1; k <= n; ++k) s += p[k] * inv[n - k];
          inv[n] = -s;
        }
        for (std::int64_t i = 0; i < -e; ++i) expected = conv::schoolbook(expected, inv);
      }
      CHECK(conv::power(p, e, 40) == expected);
    }
  }
  const std::vector<Integer> bad = {2, 1};
  CHECK_THROWS_AS(conv::power(bad, 2, 2), std::invalid_argument);
  const std::vector<Integer> short_p = {1, 1};
  CHECK_THROWS_AS(conv::power(short_p, 2, 5), std::invalid_argument);
}

}
