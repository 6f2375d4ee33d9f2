#include <iostream>

#include "ipc/cli.hpp"

int main(int argc, char** argv) { return ipc::cli::run(argc, argv, std::cout, std::cerr); }
