#include <iostream>

#include "sergeev/suite.hpp"

int main(int argc, char** argv) { return sergeev::cli_main(argc, argv, std::cout, std::cerr); }
