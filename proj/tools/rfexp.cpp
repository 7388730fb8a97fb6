#include <CLI11.hpp>

#include <iostream>

#include "rfexp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rfexp: Ramanujan-Fourier predictions for shifted divisor correlations"};
  rfexp::cli::RunConfig config;
  rfexp::cli::configure_app(app, config);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rfexp::cli::kExitUsage;
  }
  return rfexp::cli::run(config, std::cout);
}
