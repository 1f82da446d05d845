#include "realpart/cli.hpp"

int main(int argc, char** argv) { return realpart::cli::main_entry(argc, argv); }
