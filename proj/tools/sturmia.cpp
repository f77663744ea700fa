#include "sturmia/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sturmia::dispatch(argc, argv, std::cout, std::cerr); }
