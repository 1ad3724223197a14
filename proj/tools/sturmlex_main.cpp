#include <iostream>

#include "sturmlex/cli.hpp"

int main(int argc, char** argv) {
  return sturmlex::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
