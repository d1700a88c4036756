#include "scmc/cli.hpp"

int main(int argc, char** argv) { return scmc::run_cli(argc, argv); }
