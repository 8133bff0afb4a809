#include "homocurv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return homocurv::run_cli(argc, argv, std::cout, std::cerr); }
