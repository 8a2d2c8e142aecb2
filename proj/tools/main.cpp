#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  qhilb::cli::ParseOutcome parsed = qhilb::cli::parse_args(std::move(args));

  qhilb::cli::RunResult result;
  if (auto* config = std::get_if<qhilb::cli::RunConfig>(&parsed)) {
    result = qhilb::cli::run(*config);
  } else {
    result = std::get<qhilb::cli::RunResult>(parsed);
  }
  std::cout << result.output;
  std::cerr << result.error;
  return result.status;
}
