#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "rfexp/arith.hpp"
#include "rfexp/rfcoeff.hpp"

namespace rfexp::rfcoeff {
namespace {

using arith::factorize;

BigRational Q(long num, long den = 1) { return make_rational(num, den); }

// Sum_{a=j}^{j+terms-1} binom(k+a-2, k-2) p^{j-a} in doubles.
double tail_truncated(unsigned k, std::uint64_t p, unsigned j, unsigned terms) {
  double s = 0.0;
  for (unsigned a = j; a < j + terms; ++a)
    s += std::tgamma(k + a - 1.0) / (std::tgamma(k - 1.0) * std::tgamma(a + 1.0)) * std::pow(double(p), double(j) - a);
  return s;
}

const std::uint64_t kPrimes15[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

TEST(TailSum, Examples) {
  for (std::uint64_t p : {2, 3, 5, 13})
    for (unsigned j = 0; j <= 4; ++j) EXPECT_EQ(tail_sum(2, p, j), Q(p, p - 1));
  EXPECT_EQ(tail_sum(3, 2, 1), Q(6));
  EXPECT_EQ(tail_sum(2, 2, 0), Q(2));
  // brute-force rational oracle value
  EXPECT_EQ(tail_sum(4, 3, 2), Q(99, 8));
  EXPECT_THROW(tail_sum(1, 2, 1), std::domain_error);
}

TEST(TailSum, PartialSumsConvergeToSix) {
  double partial = 0.0;
  for (unsigned a = 1; a < 80; ++a) partial += (a + 1) * std::pow(2.0, 1.0 - a);
  EXPECT_NEAR(partial, 6.0, 1e-12);
}

TEST(TailSum, MatchesTruncatedSeries) {
  for (unsigned k = 2; k <= 6; ++k)
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
      for (unsigned j = 0; j <= 4; ++j) {
        const double closed = to_double(tail_sum(k, p, j));
        // 60 terms; relative comparison since the value grows with k and j
        EXPECT_NEAR(tail_truncated(k, p, j, 60), closed, 1e-12 * std::max(1.0, closed)) << k << " " << p << " " << j;
      }
}

TEST(MultPart, Examples) {
  EXPECT_EQ(mult_part(2, factorize(12)), Q(1));
  EXPECT_EQ(mult_part(3, factorize(2)), Q(3, 2));
  EXPECT_EQ(mult_part(1, factorize(5)), Q(0));
  EXPECT_EQ(mult_part(1, factorize(1)), Q(1));
  EXPECT_EQ(mult_part(4, factorize(1)), Q(1));
}

TEST(MultPart, ClassicalDivisorExpansion) {
  const arith::SmallestPrimeFactor spf(10000);
  for (std::uint64_t q = 1; q <= 10000; ++q) ASSERT_EQ(mult_part(2, spf.factorize(q)), Q(1)) << q;
}

TEST(MultPart, Multiplicative) {
  for (unsigned k = 1; k <= 4; ++k)
    for (std::uint64_t a = 1; a <= 100; ++a)
      for (std::uint64_t b = a; b <= 100; b += 7) {
        if (std::gcd(a, b) != 1) continue;
        ASSERT_EQ(mult_part(k, factorize(a * b)), mult_part(k, factorize(a)) * mult_part(k, factorize(b)));
      }
}

TEST(RFCoefficient, Examples) {
  const auto c26 = rf_coefficient(2, 6);
  EXPECT_EQ(c26.mult_part, Q(1));
  EXPECT_NEAR(c26.value, -std::log(6.0) / 6.0, 1e-15);
  EXPECT_EQ(rf_coefficient(3, 1).value, 0.0);
  EXPECT_EQ(rf_coefficient(1, 1).value, 1.0);
  EXPECT_EQ(rf_coefficient(1, 7).value, 0.0);
  // (-1)^2/2! log(2)^2/2 * 3/2
  EXPECT_NEAR(rf_coefficient(3, 2).value, std::pow(std::log(2.0), 2) / 2.0 / 2.0 * 1.5, 1e-15);
}

TEST(RFCoefficient, LuchtSignFlipsEveryCoefficient) {
  for (unsigned k = 1; k <= 4; ++k)
    for (std::uint64_t q = 1; q <= 30; ++q)
      EXPECT_EQ(rf_coefficient(k, q, SignMode::lucht_original).value, -rf_coefficient(k, q).value);
  EXPECT_EQ(rf_coefficient(1, 1, SignMode::lucht_original).value, -1.0);
}

TEST(SigmaLocal, Examples) {
  for (std::uint64_t p : {2, 3, 7})
    for (unsigned j = 0; j <= 4; ++j) EXPECT_EQ(sigma_local(1, p, j), Q(1));
  for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(sigma_local(k, 5, 0), Q(1));
  EXPECT_EQ(sigma_local(0, 3, 2), Q(0));
  EXPECT_EQ(sigma_local(0, 3, 1), Q(0));
}

TEST(SigmaLocal, MatchesTruncatedSeries) {
  for (unsigned k = 1; k <= 5; ++k)
    for (std::uint64_t p : {2, 3, 5, 11})
      for (unsigned j = 0; j <= 4; ++j) {
        double s = 0.0;
        for (unsigned i = 0; i < 200; ++i)
          s += static_cast<double>(arith::tau_prime_power(k, j + i)) * std::pow(double(p), -double(i));
        s *= std::pow(1.0 - 1.0 / double(p), double(k));
        EXPECT_NEAR(to_double(sigma_local(k, p, j)), s, 1e-10 * std::max(1.0, s));
      }
}

TEST(ALocal, Examples) {
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned j = 1; j <= 4; ++j) EXPECT_EQ(A_local(2, 2, p, j), Q(1));
  EXPECT_EQ(A_local(3, 2, 2, 1), Q(3, 2));
  EXPECT_EQ(A_local(4, 1, 3, 2), Q(0));
  // brute-force rational oracle values
  EXPECT_EQ(A_local(3, 3, 2, 1), Q(9, 4));
  EXPECT_EQ(A_local(3, 3, 3, 1), Q(25, 9));
  EXPECT_EQ(A_local(3, 4, 2, 3), Q(10));
}

TEST(ALocal, SigmaProductIdentity) {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned l = 1; l <= 5; ++l)
      for (std::uint64_t p : kPrimes15)
        for (unsigned j = 1; j <= 4; ++j)
          ASSERT_EQ(A_local(k, l, p, j), sigma_local(k - 1, p, j) * sigma_local(l - 1, p, j))
              << k << " " << l << " " << p << " " << j;
}

TEST(ALocal, PrimeSpecialization) {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned l = 1; l <= 5; ++l)
      for (std::uint64_t p : kPrimes15) {
        const BigRational w = 1 - Q(1, p);
        const BigRational expected = BigRational{p * p} * (1 - pow(w, k - 1)) * (1 - pow(w, l - 1));
        ASSERT_EQ(A_local(k, l, p, 1), expected);
      }
}

TEST(AOfQ, Examples) {
  EXPECT_EQ(A_of_q(3, 4, factorize(1)), Q(1));
  EXPECT_EQ(A_of_q(2, 2, factorize(36)), Q(1));
  EXPECT_EQ(A_of_q(3, 3, factorize(6)), A_local(3, 3, 2, 1) * A_local(3, 3, 3, 1));
  EXPECT_EQ(A_of_q(3, 3, factorize(6)), Q(25, 4));
}

// The sign convention enters A only through a product of two coefficients,
// so a uniform flip cancels.
TEST(ReplacementSign, LuchtSignCancelsInA) {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned l = 1; l <= 5; ++l)
      for (unsigned j = 1; j <= 3; ++j)
        EXPECT_EQ(A_local_rf(k, l, 3, j, SignMode::lucht_original), A_local(k, l, 3, j));
}

TEST(ReplacementSign, ProductOfTwoResidualsIsPositive) {
  for (unsigned k = 1; k <= 6; ++k) {
    EXPECT_EQ(replacement_residual_sign(k, SignMode::corrected), 1);
    EXPECT_EQ(replacement_residual_sign(k, SignMode::lucht_original), -1);
  }
}

}  // namespace
}  // namespace rfexp::rfcoeff
