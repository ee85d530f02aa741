#include <iostream>

#include "ddelab/cli/run.hpp"

int main(int argc, char** argv) { return ddelab::run(argc, argv, std::cout, std::cerr); }
