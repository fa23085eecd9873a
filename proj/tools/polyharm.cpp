#include <iostream>

#include "polyharm/cli.hpp"

int main(int argc, char** argv) { return polyharm::cli::run(argc, argv, std::cout, std::cerr); }
