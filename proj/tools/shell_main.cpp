#include <CLI11.hpp>
#include <iostream>

#include "cosserat/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"cosserat shell energy toolkit"};
  app.require_subcommand(1);

  std::string configPath;
  std::string outputDir = ".";
  bool verbose = false;

  CLI::App* run = app.add_subcommand("run", "run a scenario config");
  run->add_option("config", configPath, "scenario config file")->required();
  run->add_option("--output-dir", outputDir, "directory for CSV/OBJ outputs");
  run->add_flag("--verbose", verbose, "print per-check / per-iteration detail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    const cosserat::Scenario scenario = cosserat::parseScenario(configPath);
    return cosserat::runScenario(scenario, outputDir, verbose);
  } catch (const cosserat::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const cosserat::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const cosserat::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  }
}
