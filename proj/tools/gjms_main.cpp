#include <string>
#include <vector>

#include "gjms/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gjms::cli::main_entry(args);
}
