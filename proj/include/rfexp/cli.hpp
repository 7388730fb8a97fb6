#pragma once

// Command-line front end. Every subcommand builds a JSON document first; the
// human and CSV renderings are derived from the same values so the three
// formats never disagree.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfexp/arith.hpp"
#include "rfexp/correl.hpp"
#include "rfexp/rational.hpp"
#include "rfexp/rfcoeff.hpp"
#include "rfexp/singular.hpp"

namespace rfexp::cli {

using nlohmann::json;

enum class Command {
  constant,
  local_factor,
  singular,
  predict,
  correlate,
  carmichael,
  verify_theorem1,
  rf_coeff,
  rf_reconstruct,
};

enum class OutputFormat { human, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

struct RunConfig {
  Command command = Command::constant;
  unsigned k = 2;
  unsigned l = 2;
  std::uint64_t h = 1;
  double X = 1e6;
  std::vector<std::uint64_t> X_list{100000, 1000000, 10000000};
  std::uint64_t Q = 10000;
  std::uint64_t q1 = 1;
  std::uint64_t q2 = 1;
  std::uint64_t n = 1;
  unsigned k_max = 5;
  unsigned l_max = 5;
  std::size_t prime_count = 15;
  unsigned alpha_max = 4;
  std::uint64_t prime_cutoff = singular::kMaxPrimeCutoff;
  double tol = 1e-5;
  SignMode sign_mode = SignMode::corrected;
  OutputFormat format = OutputFormat::human;
  std::optional<std::string> output_path;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void validate(const RunConfig& c) {
  if (!(c.tol > 0.0 && c.tol <= 0.1)) throw UsageError("--tol must lie in (0, 0.1]");
  if (c.k == 0 || c.l == 0) throw UsageError("--k and --l must be >= 1");
  if (c.h == 0) throw UsageError("--h must be positive");
  if (c.Q == 0) throw UsageError("--Q must be >= 1");
  if (c.command == Command::correlate) {
    if (c.X_list.empty()) throw UsageError("--X needs at least one value");
    for (std::size_t i = 1; i < c.X_list.size(); ++i)
      if (c.X_list[i] <= c.X_list[i - 1]) throw UsageError("--X values must be strictly ascending");
    if (c.X_list.front() < 3) throw UsageError("--X values must exceed e");
  }
  if (c.command == Command::predict && !(c.X > std::exp(1.0))) throw UsageError("--X must exceed e");
  if (c.command == Command::carmichael && (c.q1 == 0 || c.q2 == 0 || c.X < 1))
    throw UsageError("--q1, --q2 and --X must be >= 1");
  if (c.command == Command::rf_reconstruct && c.n == 0) throw UsageError("--n must be positive");
  if (c.command == Command::verify_theorem1 &&
      (c.k_max == 0 || c.l_max == 0 || c.prime_count == 0 || c.alpha_max == 0))
    throw UsageError("grid bounds must be >= 1");
}

// Rationals travel as exact decimal strings plus a convenience decimal.
inline json rational_json(const BigRational& r) {
  return json{{"num", numerator_string(r)}, {"den", denominator_string(r)}, {"decimal", to_double(r)}};
}

inline BigRational rational_from_json(const json& j) {
  BigRational r{BigInteger{j.at("num").get<std::string>()}, BigInteger{j.at("den").get<std::string>()}};
  r.canonicalize();
  return r;
}

inline json series_json(const singular::SingularSeriesResult& s) {
  return json{{"k", s.k},
              {"l", s.l},
              {"h", s.h},
              {"C_truncated", s.C_truncated},
              {"C_tail_bound", s.C_tail_bound},
              {"f_exact", rational_json(s.f_exact)},
              {"B", s.B},
              {"prime_cutoff", s.prime_cutoff},
              {"h_composite", s.h_composite}};
}

struct Rendered {
  json doc;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string human;
};

inline std::string fmt_double(double v, int precision = 12) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

// Shortest representation that round-trips, same as the JSON output.
inline std::string exact_double(double v) { return json(v).dump(); }

inline Rendered render_constant(const RunConfig& c) {
  Rendered out;
  const auto e = singular::C_constant(c.k, c.l, c.tol, c.prime_cutoff);
  out.doc = {{"command", "constant"}, {"k", c.k},          {"l", c.l},
             {"tol", c.tol},          {"value", e.value}, {"tail_bound", e.tail_bound},
             {"prime_cutoff", e.prime_cutoff}};
  out.csv_header = {"k", "l", "tol", "value", "tail_bound", "prime_cutoff"};
  out.csv_rows.push_back({std::to_string(c.k), std::to_string(c.l), exact_double(c.tol), exact_double(e.value),
                          exact_double(e.tail_bound), std::to_string(e.prime_cutoff)});
  out.human = "C_{" + std::to_string(c.k) + "," + std::to_string(c.l) + "} = " + fmt_double(e.value) +
              "  (tail bound " + fmt_double(e.tail_bound, 3) + ", primes <= " + std::to_string(e.prime_cutoff) +
              ")\n";
  return out;
}

inline Rendered render_local_factor(const RunConfig& c) {
  Rendered out;
  const auto hf = arith::factorize(c.h);
  json factors = json::array();
  out.csv_header = {"p", "alpha", "rf_num", "rf_den", "ngthom_num", "ngthom_den", "decimal"};
  std::ostringstream human;
  for (const auto& pp : hf.factors()) {
    const auto rf = singular::local_factor(c.k, c.l, pp.prime, pp.exponent, singular::LocalForm::rf, c.sign_mode);
    const auto nt = singular::local_factor(c.k, c.l, pp.prime, pp.exponent, singular::LocalForm::ngthom);
    factors.push_back({{"p", pp.prime},
                       {"alpha", pp.exponent},
                       {"c_factor_rf", rational_json(rf.c_factor)},
                       {"c_factor_ngthom", rational_json(nt.c_factor)},
                       {"f_factor_rf", rational_json(*rf.f_factor)},
                       {"f_factor_ngthom", rational_json(*nt.f_factor)}});
    out.csv_rows.push_back({std::to_string(pp.prime), std::to_string(pp.exponent), numerator_string(*rf.f_factor),
                            denominator_string(*rf.f_factor), numerator_string(*nt.f_factor),
                            denominator_string(*nt.f_factor), exact_double(to_double(*rf.f_factor))});
    human << "  p=" << pp.prime << "^" << pp.exponent << ": rf " << to_string(*rf.f_factor) << ", ngthom "
          << to_string(*nt.f_factor) << "\n";
  }
  const auto f_rf = singular::f_of_h(c.k, c.l, hf, singular::LocalForm::rf, c.sign_mode);
  const auto f_nt = singular::f_of_h(c.k, c.l, hf, singular::LocalForm::ngthom);
  out.doc = {{"command", "local-factor"},
             {"k", c.k},
             {"l", c.l},
             {"h", c.h},
             {"sign_mode", std::string(to_string(c.sign_mode))},
             {"h_composite", !hf.is_one() && !hf.is_prime()},
             {"factors", factors},
             {"f_rf", rational_json(f_rf)},
             {"f_ngthom", rational_json(f_nt)},
             {"forms_agree", f_rf == f_nt}};
  out.csv_rows.push_back({"all", "", numerator_string(f_rf), denominator_string(f_rf), numerator_string(f_nt),
                          denominator_string(f_nt), exact_double(to_double(f_rf))});
  out.human = "f_{" + std::to_string(c.k) + "," + std::to_string(c.l) + "}(" + std::to_string(c.h) +
              "): rf " + to_string(f_rf) + ", ngthom " + to_string(f_nt) + " (" + fmt_double(to_double(f_rf)) +
              ")\n" + human.str();
  if (!hf.is_one() && hf.is_prime()) out.human += "note: h is prime, not composite\n";
  return out;
}

inline Rendered render_singular(const RunConfig& c) {
  Rendered out;
  const auto euler = singular::B_via_euler(c.k, c.l, c.h, c.tol, c.sign_mode, c.prime_cutoff);
  const double qsum = singular::B_via_qsum(c.k, c.l, c.h, c.Q);
  out.doc = {{"command", "singular"}, {"euler", series_json(euler)}, {"Q", c.Q},
             {"B_qsum", qsum},        {"gap", std::abs(qsum - euler.B)}};
  out.csv_header = {"k", "l", "h", "B_euler", "C_tail_bound", "prime_cutoff", "Q", "B_qsum", "gap"};
  out.csv_rows.push_back({std::to_string(c.k), std::to_string(c.l), std::to_string(c.h), exact_double(euler.B),
                          exact_double(euler.C_tail_bound), std::to_string(euler.prime_cutoff), std::to_string(c.Q),
                          exact_double(qsum), exact_double(std::abs(qsum - euler.B))});
  out.human = "B_{" + std::to_string(c.k) + "," + std::to_string(c.l) + "}(" + std::to_string(c.h) +
              "): euler " + fmt_double(euler.B) + " (C=" + fmt_double(euler.C_truncated) +
              ", f=" + to_string(euler.f_exact) + "), q-sum(Q=" + std::to_string(c.Q) + ") " + fmt_double(qsum) +
              "\n";
  if (!euler.h_composite) out.human += "note: h is not composite\n";
  return out;
}

inline Rendered render_predict(const RunConfig& c) {
  Rendered out;
  const auto p = singular::predict_main_term(c.k, c.l, c.h, c.X, c.tol, c.sign_mode);
  out.doc = {{"command", "predict"}, {"X", p.X}, {"main_term", p.value}, {"series", series_json(p.series)}};
  out.csv_header = {"k", "l", "h", "X", "B", "main_term"};
  out.csv_rows.push_back({std::to_string(c.k), std::to_string(c.l), std::to_string(c.h), exact_double(p.X),
                          exact_double(p.series.B), exact_double(p.value)});
  out.human = "main term at X=" + fmt_double(p.X) + ": " + fmt_double(p.value) + " (B=" +
              fmt_double(p.series.B) + ")\n";
  return out;
}

inline Rendered render_correlate(const RunConfig& c) {
  Rendered out;
  const auto s = correl::correlation_report(c.k, c.l, c.h, c.X_list, c.tol, c.sign_mode);
  json rows = json::array();
  out.csv_header = {"k", "l", "h", "X", "empirical", "predicted", "ratio"};
  std::ostringstream human;
  for (const auto& r : s.reports) {
    rows.push_back({{"k", r.k},
                    {"l", r.l},
                    {"h", r.h},
                    {"X", r.X},
                    {"empirical", correl::to_decimal(r.empirical)},
                    {"predicted", r.predicted},
                    {"ratio", r.ratio}});
    out.csv_rows.push_back({std::to_string(r.k), std::to_string(r.l), std::to_string(r.h), std::to_string(r.X),
                            correl::to_decimal(r.empirical), exact_double(r.predicted), exact_double(r.ratio)});
    human << "  X=" << r.X << "  empirical=" << correl::to_decimal(r.empirical)
          << "  predicted=" << fmt_double(r.predicted) << "  ratio=" << fmt_double(r.ratio, 6) << "\n";
  }
  out.doc = {{"command", "correlate"},
             {"sign_mode", std::string(to_string(c.sign_mode))},
             {"series", series_json(s.series)},
             {"reports", rows},
             {"deviation_first", s.deviation_first},
             {"deviation_last", s.deviation_last},
             {"improving", s.improving}};
  out.human = "sum_{n<=X} tau_" + std::to_string(c.k) + "(n) tau_" + std::to_string(c.l) + "(n+" +
              std::to_string(c.h) + ")\n" + human.str() + "trend: |ratio-1| " + fmt_double(s.deviation_first, 4) +
              " -> " + fmt_double(s.deviation_last, 4) + (s.improving ? " (improving)\n" : " (not improving)\n");
  return out;
}

inline Rendered render_carmichael(const RunConfig& c) {
  Rendered out;
  const auto X = static_cast<std::uint64_t>(c.X);
  const std::int64_t sum = correl::carmichael_sum(c.q1, c.q2, X, c.h);
  const std::int64_t expected = c.q1 == c.q2 ? arith::ramanujan_sum(c.q1, c.h) : 0;
  const double normalized = static_cast<double>(sum) / static_cast<double>(X);
  out.doc = {{"command", "carmichael"}, {"q1", c.q1},     {"q2", c.q2},
             {"X", X},                  {"h", c.h},       {"sum", sum},
             {"normalized", normalized}, {"expected", expected}};
  out.csv_header = {"q1", "q2", "X", "h", "sum", "normalized", "expected"};
  out.csv_rows.push_back({std::to_string(c.q1), std::to_string(c.q2), std::to_string(X), std::to_string(c.h),
                          std::to_string(sum), exact_double(normalized), std::to_string(expected)});
  out.human = "sum_{n<=" + std::to_string(X) + "} c_" + std::to_string(c.q1) + "(n) c_" + std::to_string(c.q2) +
              "(n+" + std::to_string(c.h) + ") = " + std::to_string(sum) + "  (S/X=" + fmt_double(normalized) +
              ", expected " + std::to_string(expected) + ")\n";
  return out;
}

inline Rendered render_verify(const RunConfig& c) {
  Rendered out;
  const auto r = singular::verify_theorem1(c.k_max, c.l_max, c.prime_count, c.alpha_max, c.sign_mode);
  json mismatches = json::array();
  out.csv_header = {"k", "l", "p", "alpha", "quantity", "rf_num", "rf_den", "ngthom_num", "ngthom_den"};
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"k", m.k},
                          {"l", m.l},
                          {"p", m.p},
                          {"alpha", m.alpha},
                          {"quantity", m.quantity},
                          {"rf", rational_json(m.rf)},
                          {"ngthom", rational_json(m.ngthom)}});
    out.csv_rows.push_back({std::to_string(m.k), std::to_string(m.l), std::to_string(m.p), std::to_string(m.alpha),
                            m.quantity, numerator_string(m.rf), denominator_string(m.rf),
                            numerator_string(m.ngthom), denominator_string(m.ngthom)});
  }
  out.doc = {{"command", "verify-theorem1"},
             {"k_max", r.k_max},
             {"l_max", r.l_max},
             {"prime_count", r.prime_count},
             {"alpha_max", r.alpha_max},
             {"sign_mode", std::string(to_string(r.mode))},
             {"comparisons", r.comparisons},
             {"mismatch_count", r.mismatches.size()},
             {"mismatches", mismatches}};
  out.human = std::to_string(r.comparisons) + " exact comparisons, " + std::to_string(r.mismatches.size()) +
              " mismatches\n";
  return out;
}

inline Rendered render_rf_coeff(const RunConfig& c) {
  Rendered out;
  json rows = json::array();
  out.csv_header = {"q", "mult_num", "mult_den", "value"};
  std::ostringstream human;
  const arith::SmallestPrimeFactor spf(c.Q);
  for (std::uint64_t q = 1; q <= c.Q; ++q) {
    const auto coef = rfcoeff::rf_coefficient(c.k, spf.factorize(q), c.sign_mode);
    rows.push_back({{"q", q}, {"mult_part", rational_json(coef.mult_part)}, {"value", coef.value}});
    out.csv_rows.push_back({std::to_string(q), numerator_string(coef.mult_part), denominator_string(coef.mult_part),
                            exact_double(coef.value)});
    human << "  q=" << q << "  M=" << to_string(coef.mult_part) << "  value=" << fmt_double(coef.value) << "\n";
  }
  out.doc = {{"command", "rf-coeff"}, {"k", c.k}, {"sign_mode", std::string(to_string(c.sign_mode))},
             {"coefficients", rows}};
  out.human = "RF coefficients of tau_" + std::to_string(c.k) + " (" + std::string(to_string(c.sign_mode)) +
              " sign)\n" + human.str();
  return out;
}

inline Rendered render_rf_reconstruct(const RunConfig& c) {
  Rendered out;
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t q = 1; q < c.Q; q *= 10) checkpoints.push_back(q);
  checkpoints.push_back(c.Q);
  const auto partials = correl::rf_truncated_partials(c.k, c.n, checkpoints, c.sign_mode);
  const std::uint64_t tau = arith::tau_k_at(c.k, arith::factorize(c.n));
  json rows = json::array();
  out.csv_header = {"Q", "partial_sum", "tau_k"};
  std::ostringstream human;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    rows.push_back({{"Q", checkpoints[i]}, {"partial_sum", partials[i]}});
    out.csv_rows.push_back({std::to_string(checkpoints[i]), exact_double(partials[i]), std::to_string(tau)});
    human << "  Q=" << checkpoints[i] << "  partial=" << fmt_double(partials[i]) << "\n";
  }
  out.doc = {{"command", "rf-reconstruct"},
             {"k", c.k},
             {"n", c.n},
             {"tau_k", tau},
             {"sign_mode", std::string(to_string(c.sign_mode))},
             {"diagnostic", true},
             {"partials", rows}};
  out.human = "diagnostic RF partial sums for tau_" + std::to_string(c.k) + "(" + std::to_string(c.n) +
              ") = " + std::to_string(tau) + " (no convergence guarantee)\n" + human.str();
  return out;
}

inline Rendered render(const RunConfig& c) {
  switch (c.command) {
    case Command::constant: return render_constant(c);
    case Command::local_factor: return render_local_factor(c);
    case Command::singular: return render_singular(c);
    case Command::predict: return render_predict(c);
    case Command::correlate: return render_correlate(c);
    case Command::carmichael: return render_carmichael(c);
    case Command::verify_theorem1: return render_verify(c);
    case Command::rf_coeff: return render_rf_coeff(c);
    case Command::rf_reconstruct: return render_rf_reconstruct(c);
  }
  throw std::logic_error("unhandled command");
}

inline void write_csv(std::ostream& os, const Rendered& r) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  };
  line(r.csv_header);
  for (const auto& row : r.csv_rows) line(row);
}

// Runs one configuration and writes the report to `os` (or to the configured
// output file). Returns the process exit status; errors go to `err`.
inline int run(const RunConfig& config, std::ostream& os, std::ostream& err = std::cerr) {
  try {
    validate(config);
    const Rendered r = render(config);
    std::ofstream file;
    if (config.output_path) {
      file.open(*config.output_path);
      if (!file) throw std::runtime_error("cannot open output file " + *config.output_path);
    }
    std::ostream& out = config.output_path ? file : os;
    switch (config.format) {
      case OutputFormat::human: out << r.human; break;
      case OutputFormat::json: out << r.doc.dump() << "\n"; break;
      case OutputFormat::csv: write_csv(out, r); break;
    }
    return kExitOk;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// Registers all subcommands on `app`, writing parsed values into `config`.
inline void configure_app(CLI::App& app, RunConfig& config) {
  app.require_subcommand(1);
  // --h is the shift, so help is long-form only
  app.set_help_flag("--help", "Print this help message and exit");
  auto common = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
           "--format",
           [&config](const std::string& v) {
             config.format = v == "json" ? OutputFormat::json : v == "csv" ? OutputFormat::csv : OutputFormat::human;
           },
           "Output format: human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_option("-o,--output", config.output_path, "Write the report to this file");
  };
  auto kl = [&](CLI::App* sub) {
    sub->add_option("--k", config.k, "First divisor-function order k >= 1")->capture_default_str();
    sub->add_option("--l", config.l, "Second divisor-function order l >= 1")->capture_default_str();
  };
  auto signed_opt = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
           "--sign", [&config](const std::string& v) { config.sign_mode = parse_sign_mode(v); },
           "RF coefficient sign: corrected or lucht_original")
        ->check(CLI::IsMember({"corrected", "lucht_original"}));
  };
  auto tol = [&](CLI::App* sub) { sub->add_option("--tol", config.tol, "Tail tolerance in (0, 0.1]")->capture_default_str(); };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"constant", "C_{k,l} as a truncated Euler product with tail bound", Command::constant},
      {"local-factor", "exact f_{k,l}(h) in both forms", Command::local_factor},
      {"singular", "B_{k,l}(h) via Euler product and via q-sum", Command::singular},
      {"predict", "predicted main term at X", Command::predict},
      {"correlate", "empirical shifted divisor sums against the prediction", Command::correlate},
      {"carmichael", "sum of c_q1(n) c_q2(n+h) over n <= X", Command::carmichael},
      {"verify-theorem1", "exact RF vs Ng-Thom local factor comparison", Command::verify_theorem1},
      {"rf-coeff", "RF coefficient table for q <= Q", Command::rf_coeff},
      {"rf-reconstruct", "diagnostic truncated RF partial sums of tau_k(n)", Command::rf_reconstruct},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    const Command cmd = e.command;
    sub->callback([&config, cmd] { config.command = cmd; });
    common(sub);
    switch (cmd) {
      case Command::constant:
        kl(sub);
        tol(sub);
        sub->add_option("--max-cutoff", config.prime_cutoff, "Largest prime cutoff before giving up");
        break;
      case Command::local_factor:
        kl(sub);
        signed_opt(sub);
        sub->add_option("--h", config.h, "Shift h >= 1")->required();
        break;
      case Command::singular:
        kl(sub);
        tol(sub);
        signed_opt(sub);
        sub->add_option("--h", config.h, "Shift h >= 1")->required();
        sub->add_option("--Q", config.Q, "q-sum truncation")->capture_default_str();
        sub->add_option("--max-cutoff", config.prime_cutoff, "Largest prime cutoff before giving up");
        break;
      case Command::predict:
        kl(sub);
        tol(sub);
        signed_opt(sub);
        sub->add_option("--h", config.h, "Shift h >= 1")->required();
        sub->add_option("--X", config.X, "Length of the sum")->required();
        break;
      case Command::correlate:
        kl(sub);
        tol(sub);
        signed_opt(sub);
        sub->add_option("--h", config.h, "Shift h >= 1")->required();
        sub->add_option_function<std::vector<double>>(
            "--X",
            [&config](const std::vector<double>& xs) {
              config.X_list.clear();
              for (double x : xs) {
                if (!(x >= 1.0) || x != std::floor(x) || x > 1e15) throw CLI::ValidationError("--X", "values must be positive integers");
                config.X_list.push_back(static_cast<std::uint64_t>(x));
              }
            },
            "Ascending list of X (default 1e5 1e6 1e7)");
        break;
      case Command::carmichael:
        sub->add_option("--q1", config.q1, "First modulus")->required();
        sub->add_option("--q2", config.q2, "Second modulus")->required();
        sub->add_option("--X", config.X, "Length of the sum")->required();
        sub->add_option("--h", config.h, "Shift h >= 1")->capture_default_str();
        break;
      case Command::verify_theorem1:
        signed_opt(sub);
        sub->add_option("--kmax", config.k_max)->capture_default_str();
        sub->add_option("--lmax", config.l_max)->capture_default_str();
        sub->add_option("--primes", config.prime_count, "Number of leading primes")->capture_default_str();
        sub->add_option("--alpha-max", config.alpha_max)->capture_default_str();
        break;
      case Command::rf_coeff:
        sub->add_option("--k", config.k, "Divisor-function order k >= 1")->capture_default_str();
        signed_opt(sub);
        sub->add_option("--Q", config.Q, "Largest q")->capture_default_str();
        break;
      case Command::rf_reconstruct:
        sub->add_option("--k", config.k, "Divisor-function order k >= 1")->capture_default_str();
        signed_opt(sub);
        sub->add_option("--n", config.n, "Point n >= 1")->required();
        sub->add_option("--Q", config.Q, "Largest q")->capture_default_str();
        break;
    }
  }
}

}  // namespace rfexp::cli
