#include <iostream>

#include "lab_cli.hpp"

int main(int argc, char** argv) { return groverian::lab::run(argc, argv, std::cout, std::cerr); }
