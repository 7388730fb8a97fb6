#pragma once

// Ramanujan-Fourier coefficients of tau_k and the exact local quantities built
// from them: tail sums, multiplicative parts M_k(q), the normalized products
// A_{k,l}(q), and the sigma_k(p^j, 1) factors of the Ng-Thom local factor.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rfexp/arith.hpp"
#include "rfexp/rational.hpp"

namespace rfexp {

// Sign carried by the RF coefficient of tau_k. `corrected` is (-1)^{k-1};
// `lucht_original` is the opposite parity, (-1)^k.
enum class SignMode { corrected, lucht_original };

inline std::string_view to_string(SignMode mode) {
  return mode == SignMode::corrected ? "corrected" : "lucht_original";
}

inline SignMode parse_sign_mode(std::string_view s) {
  if (s == "corrected") return SignMode::corrected;
  if (s == "lucht_original" || s == "lucht") return SignMode::lucht_original;
  throw std::invalid_argument("unknown sign mode: " + std::string(s));
}

namespace rfcoeff {

struct RFCoefficient {
  unsigned k = 1;
  std::uint64_t q = 1;
  BigRational mult_part{1};
  double value = 0.0;
};

// Sum_{a >= j} binom(k+a-2, k-2) p^{j-a}, in closed form as the complement of
// a partial sum of (1 - 1/p)^{-(k-1)}.
inline BigRational tail_sum(unsigned k, std::uint64_t p, unsigned j) {
  if (k <= 1) throw std::domain_error("tail_sum: k must be >= 2");
  if (p < 2) throw std::domain_error("tail_sum: p must be prime");
  BigRational total = pow(BigRational{BigInteger{static_cast<unsigned long>(p)},
                                      BigInteger{static_cast<unsigned long>(p - 1)}},
                          k - 1);
  total.canonicalize();
  for (unsigned a = 0; a < j; ++a)
    total -= BigRational{arith::binomial(static_cast<std::int64_t>(k) + a - 2, k - 2)} *
             inverse_power(p, a);
  return total * BigRational{integer_power(p, j)};
}

// Local factor of M_k at p^nu: (1 - 1/p)^{k-1} * tail_sum(k, p, nu).
// With k = 1 every binomial binom(a-1, -1) vanishes, so the factor is 0 for nu >= 1.
inline BigRational mult_part_local(unsigned k, std::uint64_t p, unsigned nu) {
  if (k == 0) throw std::domain_error("mult_part_local: k must be >= 1");
  if (nu == 0) return BigRational{1};
  if (k == 1) return BigRational{0};
  return pow(BigRational{1} - inverse_power(p, 1), k - 1) * tail_sum(k, p, nu);
}

inline BigRational mult_part(unsigned k, const arith::Factorization& q) {
  BigRational out{1};
  for (const auto& pp : q.factors()) {
    out *= mult_part_local(k, pp.prime, pp.exponent);
    if (out == 0) break;
  }
  return out;
}

inline int coefficient_sign(unsigned k, SignMode mode) {
  const bool even = (k - 1) % 2 == 0;
  const int corrected = even ? 1 : -1;
  return mode == SignMode::corrected ? corrected : -corrected;
}

inline RFCoefficient rf_coefficient(unsigned k, const arith::Factorization& q,
                                    SignMode mode = SignMode::corrected) {
  if (k == 0) throw std::domain_error("rf_coefficient: k must be >= 1");
  RFCoefficient c;
  c.k = k;
  c.q = q.value();
  c.mult_part = mult_part(k, q);
  const double qd = static_cast<double>(q.value());
  double factorial = 1.0;
  for (unsigned i = 2; i < k; ++i) factorial *= i;
  const double log_power = k == 1 ? 1.0 : std::pow(std::log(qd), static_cast<double>(k - 1));
  c.value = coefficient_sign(k, mode) * log_power / factorial / qd * to_double(c.mult_part);
  return c;
}

inline RFCoefficient rf_coefficient(unsigned k, std::uint64_t q, SignMode mode = SignMode::corrected) {
  if (q == 0) throw std::domain_error("rf_coefficient: q must be positive");
  return rf_coefficient(k, arith::factorize(q), mode);
}

// sigma_k(p^j, 1) = (1 - 1/p)^k * Sum_{i >= 0} tau_k(p^{j+i}) p^{-i}.
// The series is (1 - 1/p)^{-k} with its first j terms peeled off and rescaled
// by p^j; tau_0 is the convolution identity.
inline BigRational sigma_local(unsigned k, std::uint64_t p, unsigned j) {
  if (p < 2) throw std::domain_error("sigma_local: p must be prime");
  const BigRational weight = pow(BigRational{1} - inverse_power(p, 1), k);
  if (j == 0) return BigRational{1};
  BigRational full = 1 / weight;
  for (unsigned n = 0; n < j; ++n)
    full -= BigRational{BigInteger{static_cast<unsigned long>(arith::tau_prime_power(k, n))}} *
            inverse_power(p, n);
  return weight * full * BigRational{integer_power(p, j)};
}

// A_{k,l}(p^j) = (1 - 1/p)^{k+l-2} * tail_k * tail_l; A(p^0) = 1.
inline BigRational A_local(unsigned k, unsigned l, std::uint64_t p, unsigned j) {
  if (k == 0 || l == 0) throw std::domain_error("A_local: k, l must be >= 1");
  return mult_part_local(k, p, j) * mult_part_local(l, p, j);
}

inline BigRational A_of_q(unsigned k, unsigned l, const arith::Factorization& q) {
  BigRational out{1};
  for (const auto& pp : q.factors()) out *= A_local(k, l, pp.prime, pp.exponent);
  return out;
}

// Sign left on a coefficient once (-1)^{k-1} (log q)^{k-1} has been replaced
// by (log X)^{k-1}: +1 for the corrected sign, -1 for Lucht's.
inline int replacement_residual_sign(unsigned k, SignMode mode) {
  return coefficient_sign(k, mode) * coefficient_sign(k, SignMode::corrected);
}

// A_{k,l}(p^j) as it arises from the product of the two RF coefficients after
// log replacement, under the chosen sign mode.
inline BigRational A_local_rf(unsigned k, unsigned l, std::uint64_t p, unsigned j, SignMode mode) {
  const int sign = replacement_residual_sign(k, mode) * replacement_residual_sign(l, mode);
  return sign * A_local(k, l, p, j);
}

}  // namespace rfcoeff
}  // namespace rfexp
