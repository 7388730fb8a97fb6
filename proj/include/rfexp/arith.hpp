#pragma once

// Sieves and elementary multiplicative functions: primes, factorization,
// Moebius, Euler phi, k-fold divisor functions and Ramanujan sums.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfexp/rational.hpp"

namespace rfexp {

// Raised when a requested range would exceed the configured memory budget or
// a fixed-width cell would overflow.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace arith {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer together with its prime factorization, primes ascending.
class Factorization {
 public:
  Factorization() = default;

  // Validates the invariants: strictly increasing primes, exponents >= 1,
  // product equal to value.
  Factorization(std::uint64_t value, std::vector<PrimePower> factors)
      : value_(value), factors_(std::move(factors)) {
    if (value_ == 0) throw std::domain_error("Factorization: value must be positive");
    unsigned __int128 product = 1;
    std::uint64_t last = 1;
    for (const auto& pp : factors_) {
      if (pp.exponent == 0 || pp.prime <= last)
        throw std::invalid_argument("Factorization: primes must increase, exponents >= 1");
      last = pp.prime;
      for (unsigned e = 0; e < pp.exponent; ++e) {
        product *= pp.prime;
        if (product > value_) throw std::invalid_argument("Factorization: product mismatch");
      }
    }
    if (product != value_) throw std::invalid_argument("Factorization: product mismatch");
  }

  std::uint64_t value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool is_prime() const { return factors_.size() == 1 && factors_.front().exponent == 1; }

  // nu_p(value)
  unsigned valuation(std::uint64_t p) const {
    for (const auto& pp : factors_)
      if (pp.prime == p) return pp.exponent;
    return 0;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::uint64_t value_ = 1;
  std::vector<PrimePower> factors_;
};

inline std::size_t memory_budget_bytes() {
  std::size_t mb = 2048;
  if (const char* env = std::getenv("RFEXP_MEMORY_BUDGET_MB")) {
    try {
      mb = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("RFEXP_MEMORY_BUDGET_MB is not a number: ") + env);
    }
  }
  return mb << 20U;
}

inline void check_budget(std::uint64_t cells, std::size_t bytes_per_cell, const char* what) {
  const long double need = static_cast<long double>(cells) * bytes_per_cell;
  if (need > static_cast<long double>(memory_budget_bytes()))
    throw CapacityError(std::string(what) + ": range of " + std::to_string(cells) +
                        " cells exceeds memory budget (RFEXP_MEMORY_BUDGET_MB)");
}

// Primes <= limit, ascending. Empty for limit < 2.
inline std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
  if (limit < 2) return {};
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw CapacityError("sieve_primes: limit exceeds 32-bit prime range");
  check_budget(limit / 8 + 1, 1, "sieve_primes");
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// The first `count` primes.
inline std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::uint64_t limit = 32;
  while (true) {
    auto primes = sieve_primes(limit);
    if (primes.size() >= count) {
      primes.resize(count);
      return primes;
    }
    limit *= 2;
  }
}

inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  const std::uint64_t value = n;
  std::vector<PrimePower> factors;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) factors.push_back({n, 1});
  return Factorization(value, std::move(factors));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  return factorize(n).is_prime();
}

inline int mobius(const Factorization& f) {
  for (const auto& pp : f.factors())
    if (pp.exponent > 1) return 0;
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

inline std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& pp : f.factors()) {
    phi *= pp.prime - 1;
    for (unsigned e = 1; e < pp.exponent; ++e) phi *= pp.prime;
  }
  return phi;
}

// binom(n, r) with binom(n, r) = 0 for r < 0 or r > n >= 0. For negative n the
// generalized value (-1)^r binom(r-n-1, r) is returned when r >= 0, except
// binom(n, r) with r < 0 which is always 0.
inline BigInteger binomial(std::int64_t n, std::int64_t r) {
  if (r < 0) return 0;
  if (n >= 0) {
    if (r > n) return 0;
    BigInteger out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
  }
  BigInteger out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r - n - 1), static_cast<unsigned long>(r));
  return (r % 2 == 0) ? out : BigInteger{-out};
}

// tau_k(p^j) = binom(k+j-1, k-1); tau_0(p^j) = [j == 0].
inline std::uint64_t tau_prime_power(unsigned k, unsigned j) {
  if (k == 0) return j == 0 ? 1 : 0;
  BigInteger v = binomial(static_cast<std::int64_t>(k) + j - 1, static_cast<std::int64_t>(k) - 1);
  if (!v.fits_ulong_p()) throw CapacityError("tau_prime_power: value exceeds 64 bits");
  return v.get_ui();
}

inline std::uint64_t tau_k_at(unsigned k, const Factorization& f) {
  unsigned __int128 out = 1;
  for (const auto& pp : f.factors()) {
    out *= tau_prime_power(k, pp.exponent);
    if (out > std::numeric_limits<std::uint64_t>::max())
      throw CapacityError("tau_k_at: value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(out);
}

// Smallest-prime-factor table for 1..limit, built by a linear sieve.
class SmallestPrimeFactor {
 public:
  explicit SmallestPrimeFactor(std::uint64_t limit) : limit_(limit) {
    if (limit > std::numeric_limits<std::uint32_t>::max() - 1)
      throw CapacityError("SmallestPrimeFactor: limit exceeds 32-bit range");
    check_budget(limit + 1, sizeof(std::uint32_t), "SmallestPrimeFactor");
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<std::uint32_t>(i);
        primes_.push_back(static_cast<std::uint32_t>(i));
      }
      for (std::uint32_t p : primes_) {
        if (p > spf_[i] || static_cast<std::uint64_t>(p) * i > limit) break;
        spf_[p * i] = p;
      }
    }
  }

  std::uint64_t limit() const { return limit_; }
  std::uint32_t operator[](std::uint64_t n) const { return spf_[n]; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  Factorization factorize(std::uint64_t n) const {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    if (n > limit_) return arith::factorize(n);
    std::vector<PrimePower> factors;
    std::uint64_t m = n;
    while (m > 1) {
      const std::uint32_t p = spf_[m];
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      factors.push_back({p, e});
    }
    return Factorization(n, std::move(factors));
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// tau_k(n) for every 0 <= n <= N using a precomputed smallest-prime table
// (index 0 holds 0). tau_k(n) = tau_k(n / p^e) * binom(k+e-1, k-1), p = spf(n).
inline std::vector<std::uint32_t> tau_k_sieve(unsigned k, const SmallestPrimeFactor& spf) {
  if (k == 0) throw std::domain_error("tau_k_sieve: k must be >= 1");
  const std::uint64_t n_max = spf.limit();
  check_budget(n_max + 1, sizeof(std::uint32_t), "tau_k_sieve");
  std::vector<std::uint32_t> tau(n_max + 1, 0);
  if (n_max >= 1) tau[1] = 1;
  std::vector<std::uint64_t> by_exponent{1};
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint32_t p = spf[n];
    std::uint64_t rest = n / p;
    unsigned e = 1;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    while (by_exponent.size() <= e) by_exponent.push_back(tau_prime_power(k, by_exponent.size()));
    const unsigned __int128 v = static_cast<unsigned __int128>(tau[rest]) * by_exponent[e];
    if (v > std::numeric_limits<std::uint32_t>::max())
      throw CapacityError("tau_k_sieve: tau_k value exceeds 32-bit cell");
    tau[n] = static_cast<std::uint32_t>(v);
  }
  return tau;
}

inline std::vector<std::uint32_t> tau_k_sieve(unsigned k, std::uint64_t n_max) {
  if (k == 0) throw std::domain_error("tau_k_sieve: k must be >= 1");
  return tau_k_sieve(k, SmallestPrimeFactor(n_max));
}

// c_q(n) by Hoelder's formula mu(q/g) phi(q) / phi(q/g), g = gcd(q, n).
inline std::int64_t ramanujan_sum(const Factorization& q, std::uint64_t n) {
  std::int64_t mu = 1;
  std::uint64_t phi_q = 1;
  std::uint64_t phi_quot = 1;
  for (const auto& pp : q.factors()) {
    unsigned nu_n = 0;
    if (n == 0) {
      nu_n = pp.exponent;
    } else {
      std::uint64_t m = n;
      while (nu_n < pp.exponent && m % pp.prime == 0) {
        m /= pp.prime;
        ++nu_n;
      }
    }
    // local contribution: q/g has p-exponent pp.exponent - nu_n
    const unsigned quot_e = pp.exponent - nu_n;
    if (quot_e > 1) return 0;
    std::uint64_t local_phi = pp.prime - 1;
    for (unsigned e = 1; e < pp.exponent; ++e) local_phi *= pp.prime;
    phi_q *= local_phi;
    if (quot_e == 1) {
      mu = -mu;
      phi_quot *= pp.prime - 1;
    }
  }
  return mu * static_cast<std::int64_t>(phi_q / phi_quot);
}

inline std::int64_t ramanujan_sum(std::uint64_t q, std::uint64_t n) {
  if (q == 0) throw std::domain_error("ramanujan_sum: q must be positive");
  return ramanujan_sum(factorize(q), n);
}

// c_{p^j}(h) by the prime-power case split.
inline std::int64_t ramanujan_sum_prime_power(std::uint64_t p, unsigned j, std::uint64_t h) {
  if (!is_prime(p)) throw std::domain_error("ramanujan_sum_prime_power: p must be prime");
  if (j == 0) throw std::domain_error("ramanujan_sum_prime_power: j must be >= 1");
  if (h == 0) throw std::domain_error("ramanujan_sum_prime_power: h must be positive");
  unsigned nu = 0;
  std::uint64_t m = h;
  std::int64_t p_nu = 1;
  while (m % p == 0) {
    m /= p;
    ++nu;
    p_nu *= static_cast<std::int64_t>(p);
  }
  if (j <= nu) {
    std::int64_t pj1 = 1;
    for (unsigned i = 1; i < j; ++i) pj1 *= static_cast<std::int64_t>(p);
    return pj1 * static_cast<std::int64_t>(p) - pj1;
  }
  if (j == nu + 1) return -p_nu;
  return 0;
}

}  // namespace arith
}  // namespace rfexp
