#pragma once

// Configuration ingestion and command dispatch for the wallcrosser tool.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wallcross/reduce.hpp"
#include "wallcross/serialize.hpp"
#include "wallcross/svg.hpp"

namespace wallcross::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kPreconditionError = 3,
  kOracleMismatch = 4,
  kCertificateFailure = 5,
};

struct RunConfig {
  CY3Context context;
  NumClass cls;
  std::optional<std::int64_t> n;
  std::optional<Region> region;
  std::optional<VnBounds> bounds;
  std::vector<PlanePoint> points;
  std::optional<Viewport> viewport;
  bool require_certificate = false;
  unsigned mesh = 64;
  std::int64_t oracle_margin = 1;
  // Explicit lattice box for oracle-diff; replaces the padded search box.
  std::optional<LatticeBox> oracle_box;
};

// Lines "key = <json value>"; '#' starts a comment line. Unknown keys,
// duplicate keys, and malformed values throw ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

struct RunOptions {
  std::optional<std::string> out_path;
  std::optional<std::string> svg_path;
  unsigned threads = 1;
};

extern const std::vector<std::string> kCommands;

// Returns the process exit status; diagnostics go to `err`.
int run(const std::string& command, const RunConfig& config, const RunOptions& options, std::ostream& out,
        std::ostream& err);

}  // namespace wallcross::cli
