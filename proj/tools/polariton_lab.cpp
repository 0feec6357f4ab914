#include "polariton/cli/commands.hpp"

int main(int argc, char** argv) { return polariton::cli::main_entry(argc, argv); }
