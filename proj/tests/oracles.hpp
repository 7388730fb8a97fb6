#pragma once

// Brute-force oracles for the test suites. Nothing here calls into the
// closed forms under test.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace rfexp::testing {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// tau_k(n) = Sum_{d | n} tau_{k-1}(d), tau_1 = 1, i.e. ordered factorizations.
inline std::uint64_t tau_naive(unsigned k, std::uint64_t n) {
  if (k == 1) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += tau_naive(k - 1, d);
    if (d != n / d) total += tau_naive(k - 1, n / d);
  }
  return total;
}

// Sum over reduced residues a of exp(2 pi i a n / q).
inline std::complex<double> ramanujan_exponential(std::uint64_t q, std::uint64_t n) {
  std::complex<double> s{0.0, 0.0};
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::uint64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    const double angle = two_pi * static_cast<double>((a * n) % q) / static_cast<double>(q);
    s += std::polar(1.0, angle);
  }
  return s;
}

inline long long ramanujan_exponential_rounded(std::uint64_t q, std::uint64_t n) {
  return std::llround(ramanujan_exponential(q, n).real());
}

}  // namespace rfexp::testing
