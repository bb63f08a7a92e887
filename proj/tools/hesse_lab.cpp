#include "hesse/cli/cli.hpp"

int main(int argc, char** argv) { return hesse::cli::run(argc, argv); }
