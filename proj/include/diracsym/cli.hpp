#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diracsym/symmetric_pair.hpp"

namespace diracsym::cli {

enum class Command { catalog, spectrum, holonomy, casimir, verify };
enum class OutputMode { table, json };

struct CommandConfig {
  Command command = Command::catalog;
  std::optional<std::string> space;
  std::vector<int> orders;              // casimir only
  long long weyl_cap = 1000000;         // DIRACSYM_WEYL_CAP overrides
  OutputMode output = OutputMode::table;
  std::optional<std::string> catalog_path;
  std::optional<std::string> export_path;  // catalog subcommand
  bool verify_all = false;
};

// Exit codes: 0 success, 1 invariant falsified, 2 input error, 3 resource
// cap exceeded.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_cap_exceeded = 3;

int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses and validates a catalog file, merging over the built-ins (file
/// entries shadow built-ins by name). Throws ParseError with line/field
/// diagnostics.
Catalog load_catalog_file(const std::string& path);

/// Serializes every entry of a catalog to the schema accepted by
/// load_catalog_file.
std::string catalog_to_json(const Catalog& catalog);

}  // namespace diracsym::cli
