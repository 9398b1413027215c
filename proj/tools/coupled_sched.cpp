#include "coupled/cli/commands.hpp"

int main(int argc, char** argv) { return coupled::cli::run_cli(argc, argv); }
