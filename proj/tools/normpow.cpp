#include "normpow/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return normpow::cli::main_entry(argc, argv, std::cout, std::cerr);
}
