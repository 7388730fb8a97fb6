#pragma once

// Brute-force harness: exact shifted divisor correlations, Carmichael sums of
// Ramanujan sums, their comparison with the predicted main term, and a
// diagnostic truncated RF reconstruction of tau_k(n).

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rfexp/arith.hpp"
#include "rfexp/rfcoeff.hpp"
#include "rfexp/singular.hpp"

namespace rfexp::correl {

using WideCount = unsigned __int128;

inline std::string to_decimal(WideCount v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

inline double to_double(WideCount v) { return static_cast<double>(static_cast<long double>(v)); }

// Sum_{n <= X} tau_k(n) tau_l(n + h) at every X in `xs` (ascending), from one sieve pass.
inline std::vector<WideCount> shifted_divisor_partials(unsigned k, unsigned l, std::uint64_t h,
                                                       const std::vector<std::uint64_t>& xs) {
  if (k == 0 || l == 0) throw std::domain_error("k and l must be >= 1");
  if (h == 0) throw std::domain_error("shift h must be positive");
  if (xs.empty()) return {};
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == 0 || (i > 0 && xs[i] < xs[i - 1]))
      throw std::invalid_argument("X values must be positive and ascending");
  const std::uint64_t x_max = xs.back();
  const std::uint64_t n_max = x_max + h;
  arith::check_budget(n_max + 1, 3 * sizeof(std::uint32_t), "shifted_divisor_sum");
  const arith::SmallestPrimeFactor spf(n_max);
  const auto tau_k = arith::tau_k_sieve(k, spf);
  const auto tau_l_own = k == l ? std::vector<std::uint32_t>{} : arith::tau_k_sieve(l, spf);
  const auto& tau_l = k == l ? tau_k : tau_l_own;

  std::vector<WideCount> out;
  WideCount sum = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= x_max; ++n) {
    sum += static_cast<std::uint64_t>(tau_k[n]) * tau_l[n + h];
    while (next < xs.size() && xs[next] == n) {
      out.push_back(sum);
      ++next;
    }
  }
  return out;
}

inline WideCount shifted_divisor_sum(unsigned k, unsigned l, std::uint64_t X, std::uint64_t h) {
  if (X == 0) throw std::domain_error("X must be >= 1");
  return shifted_divisor_partials(k, l, h, {X}).front();
}

// Sum_{n <= X} c_{q1}(n) c_{q2}(n + h), using one tabulated period of length lcm(q1, q2).
inline std::int64_t carmichael_sum(std::uint64_t q1, std::uint64_t q2, std::uint64_t X, std::uint64_t h) {
  if (q1 == 0 || q2 == 0) throw std::domain_error("carmichael_sum: q must be positive");
  const auto f1 = arith::factorize(q1);
  const auto f2 = arith::factorize(q2);
  std::vector<std::int64_t> t1(q1), t2(q2);
  for (std::uint64_t r = 0; r < q1; ++r) t1[r] = arith::ramanujan_sum(f1, r);
  for (std::uint64_t r = 0; r < q2; ++r) t2[r] = arith::ramanujan_sum(f2, r);
  const std::uint64_t period = std::lcm(q1, q2);
  arith::check_budget(period, 1, "carmichael_sum");
  auto term = [&](std::uint64_t n) { return t1[n % q1] * t2[(n + h) % q2]; };

  __int128 period_sum = 0;
  __int128 remainder_sum = 0;
  const std::uint64_t remainder = X % period;
  for (std::uint64_t n = 1; n <= period; ++n) {
    period_sum += term(n);
    if (n == remainder) remainder_sum = period_sum;
  }
  const __int128 total = period_sum * static_cast<__int128>(X / period) + remainder_sum;
  if (total > INT64_MAX || total < INT64_MIN) throw CapacityError("carmichael_sum: result exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

struct CorrelationReport {
  unsigned k = 1;
  unsigned l = 1;
  std::uint64_t h = 1;
  std::uint64_t X = 1;
  WideCount empirical = 0;
  double predicted = 0.0;
  double ratio = 0.0;
};

struct CorrelationSeries {
  std::vector<CorrelationReport> reports;
  singular::SingularSeriesResult series;
  // |ratio - 1| at the smallest and the largest X.
  double deviation_first = 0.0;
  double deviation_last = 0.0;
  bool improving = false;
};

inline CorrelationSeries correlation_report(unsigned k, unsigned l, std::uint64_t h,
                                            const std::vector<std::uint64_t>& xs, double tol,
                                            SignMode mode = SignMode::corrected) {
  if (xs.empty()) throw std::invalid_argument("correlation_report: X list is empty");
  if (xs.front() < 3) throw std::domain_error("correlation_report: X must exceed e");
  const auto sums = shifted_divisor_partials(k, l, h, xs);
  CorrelationSeries out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto prediction = singular::predict_main_term(k, l, h, static_cast<double>(xs[i]), tol, mode);
    if (i == 0) out.series = prediction.series;
    CorrelationReport r;
    r.k = k;
    r.l = l;
    r.h = h;
    r.X = xs[i];
    r.empirical = sums[i];
    r.predicted = prediction.value;
    r.ratio = to_double(sums[i]) / prediction.value;
    out.reports.push_back(r);
  }
  out.deviation_first = std::abs(out.reports.front().ratio - 1.0);
  out.deviation_last = std::abs(out.reports.back().ratio - 1.0);
  out.improving = out.deviation_last < out.deviation_first;
  return out;
}

// Diagnostic only: partial sums of Sum_{q <= Q} hat-tau_k(q) c_q(n) in ascending
// q at each requested Q. The series converges conditionally at best, so the
// ordering is part of the definition.
inline std::vector<double> rf_truncated_partials(unsigned k, std::uint64_t n,
                                                 const std::vector<std::uint64_t>& checkpoints,
                                                 SignMode mode = SignMode::corrected) {
  if (k == 0) throw std::domain_error("rf_truncated: k must be >= 1");
  if (n == 0) throw std::domain_error("rf_truncated: n must be positive");
  if (checkpoints.empty()) return {};
  for (std::size_t i = 0; i < checkpoints.size(); ++i)
    if (checkpoints[i] == 0 || (i > 0 && checkpoints[i] < checkpoints[i - 1]))
      throw std::invalid_argument("rf_truncated: Q values must be positive and ascending");
  const std::uint64_t q_max = checkpoints.back();
  const arith::SmallestPrimeFactor spf(q_max);
  std::map<std::pair<std::uint64_t, unsigned>, double> local;
  double factorial = 1.0;
  for (unsigned i = 2; i < k; ++i) factorial *= i;
  const double sign = rfcoeff::coefficient_sign(k, mode);

  std::vector<double> out;
  long double sum = 0.0L;
  std::size_t next = 0;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const auto qf = spf.factorize(q);
    const std::int64_t c = arith::ramanujan_sum(qf, n);
    if (c != 0) {
      double m = 1.0;
      for (const auto& pp : qf.factors()) {
        auto [it, inserted] = local.try_emplace({pp.prime, pp.exponent}, 0.0);
        if (inserted) it->second = rfexp::to_double(rfcoeff::mult_part_local(k, pp.prime, pp.exponent));
        m *= it->second;
      }
      const double qd = static_cast<double>(q);
      const double log_power = k == 1 ? 1.0 : std::pow(std::log(qd), static_cast<double>(k - 1));
      sum += static_cast<long double>(sign * log_power / factorial / qd * m) * c;
    }
    while (next < checkpoints.size() && checkpoints[next] == q) {
      out.push_back(static_cast<double>(sum));
      ++next;
    }
  }
  return out;
}

inline double rf_truncated(unsigned k, std::uint64_t n, std::uint64_t Q, SignMode mode = SignMode::corrected) {
  if (Q == 0) throw std::domain_error("rf_truncated: Q must be >= 1");
  return rf_truncated_partials(k, n, {Q}, mode).front();
}

}  // namespace rfexp::correl
