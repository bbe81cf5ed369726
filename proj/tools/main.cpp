#include "plancherel/cli.hpp"

int main(int argc, char** argv) { return plancherel::cli::run(argc, argv); }
