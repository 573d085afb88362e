#include <exception>
#include <iostream>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  try {
    return seqinv::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "seqinv: internal error: " << e.what() << "\n";
    return 1;
  }
}
