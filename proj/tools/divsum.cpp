#include "divsum/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return divsum::cli::run(argc, argv, std::cout, std::cerr); }
