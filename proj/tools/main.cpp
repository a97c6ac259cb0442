#include "casson/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  int status = 0;
  const auto config = casson::cli::parse_args(argc, argv, status, std::cout, std::cerr);
  if (!config) return status;
  return casson::cli::run(*config, std::cout, std::cerr, std::cin);
}
