#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "diracsym/cli.hpp"

namespace {

long long default_weyl_cap() {
  if (const char* env = std::getenv("DIRACSYM_WEYL_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed DIRACSYM_WEYL_CAP='" << env
              << "'\n";
  }
  return 1000000;
}

}  // namespace

int main(int argc, char** argv) {
  using diracsym::cli::Command;
  using diracsym::cli::CommandConfig;
  using diracsym::cli::OutputMode;

  CLI::App app{
      "diracsym: exact first Dirac eigenvalues and holonomy criteria on "
      "equal-rank compact spin symmetric spaces"};
  app.require_subcommand(1);

  CommandConfig config;
  config.weyl_cap = default_weyl_cap();
  std::string output = "table";
  std::string space;
  std::string catalog_path;
  std::string export_path;

  auto add_common = [&](CLI::App* cmd, bool with_space) {
    cmd->add_option("--output", output, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--catalog", catalog_path,
                    "catalog JSON file merged over the built-ins");
    cmd->add_option("--weyl-cap", config.weyl_cap,
                    "Weyl enumeration cap (default 10^6)");
    if (with_space) cmd->add_option("--space", space, "catalog entry name");
  };

  CLI::App* catalog = app.add_subcommand("catalog", "list catalog entries");
  add_common(catalog, false);
  catalog->add_option("--export", export_path,
                      "write the merged catalog to a JSON file");

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "first Dirac eigenvalue report");
  add_common(spectrum, true);
  spectrum->get_option("--space")->required();

  CLI::App* holonomy =
      app.add_subcommand("holonomy", "holonomy criterion report");
  add_common(holonomy, true);
  holonomy->get_option("--space")->required();

  CLI::App* casimir =
      app.add_subcommand("casimir", "higher Casimir eigenvalues (F4_Spin9)");
  add_common(casimir, true);
  casimir->get_option("--space")->required();
  casimir->add_option("--orders", config.orders, "orders, e.g. 2,3,4")
      ->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify, true);
  verify->add_flag("--all", config.verify_all, "verify every entry (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : diracsym::cli::exit_input_error;
  }

  if (catalog->parsed()) config.command = Command::catalog;
  if (spectrum->parsed()) config.command = Command::spectrum;
  if (holonomy->parsed()) config.command = Command::holonomy;
  if (casimir->parsed()) config.command = Command::casimir;
  if (verify->parsed()) config.command = Command::verify;

  config.output = output == "json" ? OutputMode::json : OutputMode::table;
  if (!space.empty()) config.space = space;
  if (!catalog_path.empty()) config.catalog_path = catalog_path;
  if (!export_path.empty()) config.export_path = export_path;

  return diracsym::cli::run(config, std::cout, std::cerr);
}
