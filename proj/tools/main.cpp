#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace wallcross::cli;
  CLI::App app{"Walls, safe areas and rank reduction in the (b,w)-plane"};
  std::string command, config_path, out_path, svg_path;
  unsigned threads = 0;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("--config", config_path, "Configuration file")->required();
  app.add_option("--out", out_path, "JSON output file");
  app.add_option("--svg", svg_path, "SVG output file");
  app.add_option("--threads", threads, "Worker threads for wall enumeration")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  RunOptions options;
  if (!out_path.empty()) options.out_path = out_path;
  if (!svg_path.empty()) options.svg_path = svg_path;
  if (threads == 0) {
    if (const char* env = std::getenv("WALLCROSSER_THREADS")) {
      char* end = nullptr;
      long t = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || t < 1) {
        std::cerr << "error: WALLCROSSER_THREADS must be a positive integer\n";
        return kConfigError;
      }
      threads = static_cast<unsigned>(t);
    } else {
      threads = 1;
    }
  }
  options.threads = threads;

  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const wallcross::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return run(command, config, options, std::cout, std::cerr);
}
