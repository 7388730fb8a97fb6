#pragma once

// The singular series C_{k,l} f_{k,l}(h): local factors in the RF-derived form
// and in the Ng-Thom form, their exact equivalence check, the truncated Euler
// product for C with an explicit tail bound, the q-sum route to B, and the
// main-term predictor.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rfexp/arith.hpp"
#include "rfexp/rational.hpp"
#include "rfexp/rfcoeff.hpp"

namespace rfexp::singular {

enum class LocalForm { rf, ngthom };

inline std::string_view to_string(LocalForm form) { return form == LocalForm::rf ? "rf" : "ngthom"; }

struct LocalFactorValue {
  std::uint64_t p = 2;
  LocalForm form = LocalForm::rf;
  BigRational c_factor{1};
  // Only defined when p | h.
  std::optional<BigRational> f_factor;
};

struct EulerProduct {
  double value = 1.0;
  double tail_bound = 0.0;
  std::uint64_t prime_cutoff = 2;
};

class ToleranceNotReached : public CapacityError {
 public:
  ToleranceNotReached(const std::string& what, EulerProduct partial)
      : CapacityError(what), partial_(partial) {}
  const EulerProduct& partial() const { return partial_; }

 private:
  EulerProduct partial_;
};

struct SingularSeriesResult {
  unsigned k = 1;
  unsigned l = 1;
  std::uint64_t h = 1;
  double C_truncated = 1.0;
  double C_tail_bound = 0.0;
  BigRational f_exact{1};
  double B = 1.0;
  std::uint64_t prime_cutoff = 2;
  // The derivation is stated for composite shifts; 1 and primes are accepted
  // but flagged here.
  bool h_composite = false;
};

inline constexpr std::uint64_t kInitialPrimeCutoff = 1024;
inline constexpr std::uint64_t kMaxPrimeCutoff = std::uint64_t{1} << 28;

inline void require_kl(unsigned k, unsigned l) {
  if (k == 0 || l == 0) throw std::domain_error("k and l must be >= 1");
}

inline void require_prime(std::uint64_t p) {
  if (!arith::is_prime(p)) throw std::domain_error("p must be prime: " + std::to_string(p));
}

// p-factor of C_{k,l} on the p-not-dividing-h branch of the Euler product:
// 1 + c_p(h) A(p)/p^2 with c_p(h) = -1.
inline BigRational c_factor_rf(unsigned k, unsigned l, std::uint64_t p,
                               SignMode mode = SignMode::corrected) {
  require_kl(k, l);
  require_prime(p);
  return BigRational{1} - rfcoeff::A_local_rf(k, l, p, 1, mode) * inverse_power(p, 2);
}

inline BigRational c_factor_ngthom(unsigned k, unsigned l, std::uint64_t p) {
  require_kl(k, l);
  require_prime(p);
  const BigRational w = BigRational{1} - inverse_power(p, 1);
  return pow(w, k - 1) + pow(w, l - 1) - pow(w, k + l - 2);
}

// p-factor of f_{k,l}(h) where alpha = nu_p(h) >= 1.
inline BigRational f_factor_rf(unsigned k, unsigned l, std::uint64_t p, unsigned alpha,
                               SignMode mode = SignMode::corrected) {
  require_kl(k, l);
  if (alpha == 0) throw std::domain_error("f_factor_rf: alpha must be >= 1");
  BigRational numerator{1};
  for (unsigned j = 1; j <= alpha; ++j) {
    const BigInteger weight = integer_power(p, j) - integer_power(p, j - 1);
    numerator += BigRational{weight} * rfcoeff::A_local_rf(k, l, p, j, mode) * inverse_power(p, 2 * j);
  }
  numerator -= BigRational{integer_power(p, alpha)} * rfcoeff::A_local_rf(k, l, p, alpha + 1, mode) *
               inverse_power(p, 2 * (alpha + 1));
  return numerator / c_factor_rf(k, l, p, mode);
}

inline BigRational f_factor_ngthom(unsigned k, unsigned l, std::uint64_t p, unsigned alpha) {
  require_kl(k, l);
  if (alpha == 0) throw std::domain_error("f_factor_ngthom: alpha must be >= 1");
  auto sigma_pair = [&](unsigned j) -> BigRational {
    return rfcoeff::sigma_local(k - 1, p, j) * rfcoeff::sigma_local(l - 1, p, j);
  };
  BigRational numerator{0};
  for (unsigned j = 0; j <= alpha; ++j)
    numerator += sigma_pair(j) * inverse_power(p, j) - sigma_pair(j + 1) * inverse_power(p, j + 2);
  return numerator / c_factor_ngthom(k, l, p);
}

inline LocalFactorValue local_factor(unsigned k, unsigned l, std::uint64_t p, unsigned alpha,
                                     LocalForm form, SignMode mode = SignMode::corrected) {
  LocalFactorValue v;
  v.p = p;
  v.form = form;
  if (form == LocalForm::rf) {
    v.c_factor = c_factor_rf(k, l, p, mode);
    if (alpha != 0) v.f_factor = f_factor_rf(k, l, p, alpha, mode);
  } else {
    v.c_factor = c_factor_ngthom(k, l, p);
    if (alpha != 0) v.f_factor = f_factor_ngthom(k, l, p, alpha);
  }
  return v;
}

inline BigRational f_of_h(unsigned k, unsigned l, const arith::Factorization& h, LocalForm form,
                          SignMode mode = SignMode::corrected) {
  require_kl(k, l);
  BigRational out{1};
  for (const auto& pp : h.factors())
    out *= form == LocalForm::rf ? f_factor_rf(k, l, pp.prime, pp.exponent, mode)
                                 : f_factor_ngthom(k, l, pp.prime, pp.exponent);
  return out;
}

struct Theorem1Mismatch {
  unsigned k;
  unsigned l;
  std::uint64_t p;
  unsigned alpha;  // 0 for the C-factor comparison
  std::string quantity;  // "C" or "f"
  BigRational rf;
  BigRational ngthom;
};

struct Theorem1Report {
  unsigned k_max = 0;
  unsigned l_max = 0;
  std::size_t prime_count = 0;
  unsigned alpha_max = 0;
  SignMode mode = SignMode::corrected;
  std::size_t comparisons = 0;
  std::vector<Theorem1Mismatch> mismatches;
};

// Exact comparison of both local factors over the (k, l, p, alpha) grid.
inline Theorem1Report verify_theorem1(unsigned k_max, unsigned l_max, std::size_t prime_count,
                                      unsigned alpha_max, SignMode mode = SignMode::corrected) {
  if (k_max == 0 || l_max == 0 || prime_count == 0 || alpha_max == 0)
    throw std::domain_error("verify_theorem1: grid bounds must be >= 1");
  Theorem1Report report;
  report.k_max = k_max;
  report.l_max = l_max;
  report.prime_count = prime_count;
  report.alpha_max = alpha_max;
  report.mode = mode;
  const auto primes = arith::first_primes(prime_count);
  for (unsigned k = 1; k <= k_max; ++k) {
    for (unsigned l = 1; l <= l_max; ++l) {
      for (std::uint64_t p : primes) {
        BigRational c_rf = c_factor_rf(k, l, p, mode);
        BigRational c_nt = c_factor_ngthom(k, l, p);
        ++report.comparisons;
        if (c_rf != c_nt) report.mismatches.push_back({k, l, p, 0, "C", c_rf, c_nt});
        for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
          BigRational f_rf = f_factor_rf(k, l, p, alpha, mode);
          BigRational f_nt = f_factor_ngthom(k, l, p, alpha);
          ++report.comparisons;
          if (f_rf != f_nt) report.mismatches.push_back({k, l, p, alpha, "f", f_rf, f_nt});
        }
      }
    }
  }
  return report;
}

// 1 - (1 - (1-1/p)^{k-1}) (1 - (1-1/p)^{l-1}) in floating point, without
// cancellation for large p.
inline long double c_factor_double(unsigned k, unsigned l, std::uint64_t p) {
  const long double lw = std::log1p(-1.0L / static_cast<long double>(p));
  const long double a = -std::expm1(static_cast<long double>(k - 1) * lw);
  const long double b = -std::expm1(static_cast<long double>(l - 1) * lw);
  return 1.0L - a * b;
}

// Truncated Euler product for C_{k,l}. Each omitted factor is 1 - theta_p with
// 0 <= theta_p <= (k-1)(l-1)/p^2, and Sum_{p>P} p^{-2} < 1/P, so the true value
// lies in [C_P (1 - (k-1)(l-1)/P), C_P]. The cutoff P doubles until
// C_P (k-1)(l-1)/P <= tol.
inline EulerProduct C_constant(unsigned k, unsigned l, double tol,
                               std::uint64_t max_cutoff = kMaxPrimeCutoff) {
  require_kl(k, l);
  if (!(tol > 0.0 && tol <= 0.1)) throw std::domain_error("C_constant: tol must lie in (0, 0.1]");
  if (k == 1 || l == 1) return EulerProduct{1.0, 0.0, 2};
  const long double slope = static_cast<long double>(k - 1) * (l - 1);
  long double product = 1.0L;
  std::uint64_t done = 1;
  std::uint64_t cutoff = kInitialPrimeCutoff;
  while (true) {
    for (std::uint32_t p : arith::sieve_primes(cutoff))
      if (p > done) product *= c_factor_double(k, l, p);
    done = cutoff;
    const long double bound = product * slope / static_cast<long double>(cutoff);
    EulerProduct result{static_cast<double>(product), static_cast<double>(bound), cutoff};
    if (bound <= tol) return result;
    if (cutoff * 2 > max_cutoff)
      throw ToleranceNotReached("C_constant: tolerance not reached below the maximum prime cutoff",
                                result);
    cutoff *= 2;
  }
}

inline SingularSeriesResult B_via_euler(unsigned k, unsigned l, std::uint64_t h, double tol,
                                        SignMode mode = SignMode::corrected,
                                        std::uint64_t max_cutoff = kMaxPrimeCutoff) {
  require_kl(k, l);
  if (h == 0) throw std::domain_error("shift h must be positive");
  const auto hf = arith::factorize(h);
  const EulerProduct c = C_constant(k, l, tol, max_cutoff);
  SingularSeriesResult r;
  r.k = k;
  r.l = l;
  r.h = h;
  r.C_truncated = c.value;
  r.C_tail_bound = c.tail_bound;
  r.prime_cutoff = c.prime_cutoff;
  r.f_exact = f_of_h(k, l, hf, LocalForm::rf, mode);
  r.B = c.value * to_double(r.f_exact);
  r.h_composite = !hf.is_one() && !hf.is_prime();
  return r;
}

// Partial sums of Sum_{q <= Q} c_q(h) A_{k,l}(q) / q^2 at each requested Q
// (ascending), summed in increasing q. Only q in the support of c_q(h) are
// visited: nu_p(q) <= nu_p(h) + 1 for every p.
inline std::vector<double> B_via_qsum_partials(unsigned k, unsigned l, std::uint64_t h,
                                               const std::vector<std::uint64_t>& checkpoints) {
  require_kl(k, l);
  if (h == 0) throw std::domain_error("shift h must be positive");
  if (checkpoints.empty()) return {};
  for (std::size_t i = 0; i < checkpoints.size(); ++i)
    if (checkpoints[i] == 0 || (i > 0 && checkpoints[i] < checkpoints[i - 1]))
      throw std::invalid_argument("B_via_qsum: Q values must be positive and ascending");
  const std::uint64_t q_max = checkpoints.back();
  const arith::SmallestPrimeFactor spf(q_max);
  const auto hf = arith::factorize(h);
  std::map<std::pair<std::uint64_t, unsigned>, double> a_cache;
  auto a_local = [&](std::uint64_t p, unsigned j) {
    auto [it, inserted] = a_cache.try_emplace({p, j}, 0.0);
    if (inserted) it->second = to_double(rfcoeff::A_local(k, l, p, j));
    return it->second;
  };

  std::vector<double> out;
  long double sum = 0.0L;
  std::size_t next = 0;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const auto qf = spf.factorize(q);
    bool in_support = true;
    for (const auto& pp : qf.factors())
      if (pp.exponent > hf.valuation(pp.prime) + 1) {
        in_support = false;
        break;
      }
    if (in_support) {
      const std::int64_t c = arith::ramanujan_sum(qf, h);
      if (c != 0) {
        long double a = 1.0L;
        for (const auto& pp : qf.factors()) a *= a_local(pp.prime, pp.exponent);
        const long double qd = static_cast<long double>(q);
        sum += static_cast<long double>(c) * a / (qd * qd);
      }
    }
    while (next < checkpoints.size() && checkpoints[next] == q) {
      out.push_back(static_cast<double>(sum));
      ++next;
    }
  }
  return out;
}

inline double B_via_qsum(unsigned k, unsigned l, std::uint64_t h, std::uint64_t Q) {
  if (Q == 0) throw std::domain_error("B_via_qsum: Q must be >= 1");
  return B_via_qsum_partials(k, l, h, {Q}).front();
}

struct MainTermPrediction {
  SingularSeriesResult series;
  double X = 0.0;
  double value = 0.0;
};

// C f X (log X)^{k+l-2} / ((k-1)! (l-1)!)
inline MainTermPrediction predict_main_term(unsigned k, unsigned l, std::uint64_t h, double X,
                                            double tol, SignMode mode = SignMode::corrected) {
  if (!(X > std::exp(1.0))) throw std::domain_error("predict_main_term: X must exceed e");
  MainTermPrediction out;
  out.series = B_via_euler(k, l, h, tol, mode);
  out.X = X;
  const double log_x = std::log(X);
  double scale = X * std::pow(log_x, static_cast<double>(k + l - 2));
  for (unsigned i = 2; i < k; ++i) scale /= i;
  for (unsigned i = 2; i < l; ++i) scale /= i;
  out.value = out.series.B * scale;
  return out;
}

}  // namespace rfexp::singular
