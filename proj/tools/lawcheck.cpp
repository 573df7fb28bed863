#include <iostream>

#include "freelaws/lawcheck/cli.hpp"

int main(int argc, char** argv) {
  return freelaws::lawcheck::cli_main(argc, argv, std::cout, std::cerr);
}
