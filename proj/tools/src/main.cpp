#include <iostream>

#include "rbmq/cli/cli.hpp"

int main(int argc, char** argv) { return rbmq::cli::run(argc, argv, std::cout, std::cerr); }
