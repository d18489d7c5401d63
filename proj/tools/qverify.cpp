#include <iostream>

#include "qverify/cli.hpp"

int main(int argc, char** argv) { return qverify::cli::run(argc, argv, std::cout, std::cerr); }
