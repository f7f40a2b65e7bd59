#include "sumcap/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return sumcap::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "sumcap: " << e.what() << "\n";
    return 3;
  }
}
