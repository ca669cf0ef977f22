#include "commands.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  try {
    return hexcount::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "hexcount: " << e.what() << '\n';
    return 2;
  }
}
