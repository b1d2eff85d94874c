#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "virmod/exact.hpp"
#include "virmod/matrix.hpp"

using virmod::BigRational;
using virmod::ModP;
using virmod::RationalMatrix;

TEST_CASE("BigRational stays reduced") {
  const BigRational q(6, -8);
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 4);
  CHECK((BigRational(1, 6) + BigRational(1, 3)) == BigRational(1, 2));
  CHECK((BigRational(2, 3) * BigRational(9, 4)).to_fraction_string() == "3/2");
  CHECK(BigRational(0).to_fraction_string() == "0/1");
  CHECK(BigRational(5).to_string() == "5");
  CHECK_THROWS_AS(BigRational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}

TEST_CASE("BigRational parse") {
  CHECK(BigRational::parse("17/5") == BigRational(17, 5));
  CHECK(BigRational::parse("-4/6") == BigRational(-2, 3));
  CHECK(BigRational::parse("12") == BigRational(12));
  CHECK_THROWS_AS(BigRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("1/"), std::invalid_argument);
}

TEST_CASE("p_valuation examples") {
  CHECK(virmod::p_valuation(BigRational(3, 80), 5) == -1);
  // 35/80 reduces to 7/16: no factor of 5 on either side.
  CHECK(virmod::p_valuation(BigRational(35, 80), 5) == 0);
  CHECK(virmod::p_valuation(BigRational(7), 7) == 1);
  CHECK(virmod::p_valuation(BigRational(-50, 3), 5) == 2);
  CHECK_THROWS_AS(virmod::p_valuation(BigRational(0), 5), std::domain_error);
  CHECK_THROWS_AS(virmod::p_valuation(BigRational(3), 9), virmod::ContractViolation);
}

TEST_CASE("reduce_mod_p examples") {
  auto r = virmod::reduce_mod_p(BigRational(1, 16), 7);
  REQUIRE(r.has_value());
  CHECK(r->value() == 4);
  CHECK(virmod::reduce_mod_p(BigRational(1, 2), 7)->value() == 4);
  CHECK(virmod::reduce_mod_p(BigRational(0), 11)->value() == 0);
  CHECK_FALSE(virmod::reduce_mod_p(BigRational(3, 80), 5).has_value());
  CHECK(virmod::reduce_mod_p(BigRational(-1, 3), 7)->value() == 2);
  CHECK_THROWS_AS(virmod::reduce_mod_p(BigRational(1), 2), virmod::ContractViolation);
  CHECK_THROWS_AS(virmod::reduce_mod_p(BigRational(1), 15), virmod::ContractViolation);
}

TEST_CASE("ModP arithmetic") {
  const ModP a(5, 7), b(4, 7);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((b - a).value() == 6);
  CHECK((a * b).value() == 6);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((-a).value() == 2);
  CHECK_THROWS_AS(ModP(0, 7).inverse(), std::domain_error);
  CHECK_THROWS_AS(ModP(1, 7) + ModP(1, 11), virmod::ContractViolation);
}

TEST_CASE("primes") {
  CHECK(virmod::primes_up_to(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  for (std::uint32_t n = 0; n < 500; ++n) {
    bool has_factor = n < 2;
    for (std::uint32_t d = 2; d < n; ++d)
      if (n % d == 0) has_factor = true;
    CHECK(virmod::is_prime(n) == !has_factor);
  }
}

TEST_CASE("reduction is a ring homomorphism and valuation is additive") {
  std::mt19937 gen(7);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 101u}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = oracle::random_rational(gen, 40, 30);
      const auto b = oracle::random_rational(gen, 40, 30);
      const auto ra = virmod::reduce_mod_p(a, p), rb = virmod::reduce_mod_p(b, p);
      if (ra && rb) {
        const auto sum = virmod::reduce_mod_p(a + b, p);
        const auto prod = virmod::reduce_mod_p(a * b, p);
        REQUIRE(sum.has_value());
        REQUIRE(prod.has_value());
        CHECK(*sum == *ra + *rb);
        CHECK(*prod == *ra * *rb);
      }
      if (!a.is_zero() && !b.is_zero()) {
        CHECK(virmod::p_valuation(a * b, p) == virmod::p_valuation(a, p) + virmod::p_valuation(b, p));
        // Undefined exactly when the valuation is negative.
        CHECK(ra.has_value() == (virmod::p_valuation(a, p) >= 0));
      }
    }
  }
}

TEST_CASE("rank and determinant examples") {
  const BigRational zero(0), one(1);
  CHECK(virmod::rank(RationalMatrix::identity(5, zero, one)) == 5);
  CHECK(virmod::rank(RationalMatrix(3, 4, zero)) == 0);
  CHECK(virmod::rank(RationalMatrix{{BigRational(1, 4), zero}, {zero, zero}}) == 1);
  CHECK(virmod::determinant(RationalMatrix::identity(4, zero, one)) == one);

  // Level-2 Gram form at (c, h) = (1/2, 1/16).
  const BigRational c(1, 2), h(1, 16);
  const RationalMatrix g{{BigRational(4) * h + c / BigRational(2), BigRational(6) * h},
                         {BigRational(6) * h, BigRational(8) * h * h + BigRational(4) * h}};
  CHECK(virmod::determinant(g) == zero);
  CHECK(oracle::cofactor_determinant(g) == zero);

  CHECK_THROWS_AS(virmod::determinant(RationalMatrix(2, 3, zero)), virmod::ContractViolation);
  CHECK(virmod::determinant(RationalMatrix{{BigRational(2), BigRational(3)}, {BigRational(4), BigRational(5)}}) ==
        BigRational(-2));
}

TEST_CASE("rank handles skipped pivot columns") {
  const BigRational z(0);
  const RationalMatrix m{{z, BigRational(2), BigRational(1)},
                         {z, BigRational(4), BigRational(2)},
                         {z, z, BigRational(3, 7)}};
  CHECK(virmod::rank(m) == 2);
  CHECK(virmod::rank(*virmod::reduce_mod_p(m, 5)) == 2);
  CHECK(virmod::rank(*virmod::reduce_mod_p(m, 3)) == 1);  // 3/7 vanishes mod 3
}

TEST_CASE("Bareiss determinant equals cofactor expansion up to 5x5") {
  std::mt19937 gen(2024);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      RationalMatrix m(n, n, BigRational(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          // Mix in low-rank and rational cases.
          m(i, j) = trial % 3 == 0 ? BigRational(static_cast<long>(gen() % 5) - 2)
                                   : oracle::random_rational(gen, 9, 6);
        }
      if (trial % 7 == 0 && n > 1)
        for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * BigRational(3, 2);
      const auto det = virmod::determinant(m);
      CHECK(det == oracle::cofactor_determinant(m));
      CHECK((virmod::rank(m) == n) == !det.is_zero());
    }
  }
}

TEST_CASE("rank mod p never exceeds rank over Q") {
  std::mt19937 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + gen() % 6, cols = 1 + gen() % 6;
    RationalMatrix m(rows, cols, BigRational(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = BigRational(static_cast<long>(gen() % 11) - 5);
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const auto mp = virmod::reduce_mod_p(m, p);
      REQUIRE(mp.has_value());
      CHECK(virmod::rank(*mp) <= virmod::rank(m));
    }
  }
}
