#include <string>
#include <vector>

#include "cayleylab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cayleylab::cli::run(args);
}
