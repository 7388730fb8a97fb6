#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rfexp {

// Exact rational; always kept in canonical (reduced, positive denominator) form.
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  BigRational r{BigInteger{static_cast<long>(num)}, BigInteger{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

inline BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational out{1};
  BigRational b = base;
  while (exponent != 0) {
    if (exponent & 1U) out *= b;
    b *= b;
    exponent >>= 1U;
  }
  return out;
}

// 1/p^e
inline BigRational inverse_power(std::uint64_t p, unsigned e) {
  BigInteger den;
  mpz_ui_pow_ui(den.get_mpz_t(), p, e);
  return BigRational{BigInteger{1}, den};
}

inline BigInteger integer_power(std::uint64_t p, unsigned e) {
  BigInteger out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

inline std::string numerator_string(const BigRational& r) { return r.get_num().get_str(); }
inline std::string denominator_string(const BigRational& r) { return r.get_den().get_str(); }

inline std::string to_string(const BigRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Truncates toward zero; fine for display, exact values travel as num/den strings.
inline double to_double(const BigRational& r) { return mpq_get_d(r.get_mpq_t()); }

}  // namespace rfexp
