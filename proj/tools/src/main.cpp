#include <iostream>

#include "kaonbell_cli/cli.hpp"

int main(int argc, char** argv) {
  return kaonbell::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
