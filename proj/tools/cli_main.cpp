#include "cli_commands.hpp"

int main(int argc, char** argv) { return grlmp::cli::run(argc, argv); }
