#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rfexp/cli.hpp"

namespace rfexp::cli {
namespace {

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "rfexp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  CLI::App app;
  RunConfig config;
  configure_app(app, config);
  Outcome o;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError&) {
    o.status = kExitUsage;
    return o;
  }
  std::ostringstream out, err;
  o.status = run(config, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

TEST(Cli, ConstantHuman) {
  const auto o = run_args({"constant", "--k", "2", "--l", "2", "--tol", "1e-5"});
  ASSERT_EQ(o.status, kExitOk);
  EXPECT_NE(o.out.find("0.60792"), std::string::npos);
  EXPECT_NE(o.out.find("tail bound"), std::string::npos);
}

TEST(Cli, VerifyTheorem1) {
  const auto o = run_args({"verify-theorem1", "--kmax", "5", "--lmax", "5", "--primes", "15", "--alpha-max", "4"});
  ASSERT_EQ(o.status, kExitOk);
  EXPECT_NE(o.out.find(" 0 mismatches"), std::string::npos);
}

TEST(Cli, LocalFactorBothForms) {
  const auto o = run_args({"local-factor", "--k", "2", "--l", "2", "--h", "12", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk);
  const auto doc = json::parse(o.out);
  EXPECT_EQ(rational_from_json(doc["f_rf"]), make_rational(7, 3));
  EXPECT_EQ(rational_from_json(doc["f_ngthom"]), make_rational(7, 3));
  EXPECT_TRUE(doc["forms_agree"].get<bool>());
  EXPECT_EQ(doc["factors"].size(), 2U);
}

TEST(Cli, JsonRoundTripsBitExactly) {
  const auto o = run_args({"singular", "--k", "3", "--l", "2", "--h", "6", "--Q", "2000", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk);
  const auto doc = json::parse(o.out);
  const auto direct = singular::B_via_euler(3, 2, 6, 1e-5);
  EXPECT_EQ(doc["euler"]["B"].get<double>(), direct.B);
  EXPECT_EQ(doc["euler"]["C_truncated"].get<double>(), direct.C_truncated);
  EXPECT_EQ(doc["euler"]["C_tail_bound"].get<double>(), direct.C_tail_bound);
  EXPECT_EQ(rational_from_json(doc["euler"]["f_exact"]), direct.f_exact);
  EXPECT_EQ(doc["B_qsum"].get<double>(), singular::B_via_qsum(3, 2, 6, 2000));
  // re-serialization is byte-identical
  EXPECT_EQ(doc.dump() + "\n", o.out);
}

TEST(Cli, CorrelateJsonCarriesExactEmpirical) {
  const auto o = run_args({"correlate", "--k", "2", "--l", "2", "--h", "2", "--X", "1000", "20000", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk);
  const auto doc = json::parse(o.out);
  ASSERT_EQ(doc["reports"].size(), 2U);
  EXPECT_EQ(doc["reports"][1]["empirical"].get<std::string>(),
            correl::to_decimal(correl::shifted_divisor_sum(2, 2, 20000, 2)));
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"rf-coeff", "--k", "3", "--Q", "50", "--format", "csv"};
  EXPECT_EQ(run_args(args).out, run_args(args).out);
}

TEST(Cli, CsvHeaders) {
  const auto o = run_args({"carmichael", "--q1", "6", "--q2", "6", "--X", "1e4", "--h", "2", "--format", "csv"});
  ASSERT_EQ(o.status, kExitOk);
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "q1,q2,X,h,sum,normalized,expected");
  const auto v = run_args({"verify-theorem1", "--kmax", "2", "--lmax", "2", "--primes", "3", "--alpha-max", "2",
                           "--format", "csv"});
  EXPECT_EQ(v.out, "k,l,p,alpha,quantity,rf_num,rf_den,ngthom_num,ngthom_den\n");
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "rfexp_cli_out.json";
  const auto o = run_args({"predict", "--k", "1", "--l", "1", "--h", "4", "--X", "1000", "--format", "json", "-o", path});
  ASSERT_EQ(o.status, kExitOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  const auto doc = json::parse(in);
  EXPECT_EQ(doc["main_term"].get<double>(), 1000.0);
  std::remove(path.c_str());
}

TEST(Cli, ReconstructIsLabelledDiagnostic) {
  const auto o = run_args({"rf-reconstruct", "--k", "2", "--n", "6", "--Q", "1000", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk);
  const auto doc = json::parse(o.out);
  EXPECT_TRUE(doc["diagnostic"].get<bool>());
  EXPECT_EQ(doc["tau_k"].get<int>(), 4);
  EXPECT_EQ(doc["partials"].size(), 4U);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_args({"constant", "--tol", "0.5"}).status, kExitUsage);
  EXPECT_EQ(run_args({"constant", "--bogus"}).status, kExitUsage);
  EXPECT_EQ(run_args({"local-factor", "--k", "2"}).status, kExitUsage);
  EXPECT_EQ(run_args({"local-factor", "--h", "0"}).status, kExitUsage);
  EXPECT_EQ(run_args({"correlate", "--h", "2", "--X", "1000", "100"}).status, kExitUsage);
  EXPECT_EQ(run_args({"verify-theorem1", "--sign", "upside_down"}).status, kExitUsage);
  EXPECT_EQ(run_args({}).status, kExitUsage);
}

TEST(Cli, CapacityErrorSuppressesOutput) {
  setenv("RFEXP_MEMORY_BUDGET_MB", "1", 1);
  const auto o = run_args({"correlate", "--k", "2", "--l", "2", "--h", "2", "--X", "1e6"});
  unsetenv("RFEXP_MEMORY_BUDGET_MB");
  EXPECT_EQ(o.status, kExitCapacity);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("capacity"), std::string::npos);
  const auto c = run_args({"constant", "--tol", "1e-7", "--max-cutoff", "5000"});
  EXPECT_EQ(c.status, kExitCapacity);
}

TEST(Cli, LuchtSignFlagParses) {
  const auto o = run_args({"rf-coeff", "--k", "2", "--Q", "3", "--sign", "lucht_original", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk);
  const auto doc = json::parse(o.out);
  EXPECT_EQ(doc["sign_mode"], "lucht_original");
  EXPECT_GT(doc["coefficients"][1]["value"].get<double>(), 0.0);
}

}  // namespace
}  // namespace rfexp::cli
