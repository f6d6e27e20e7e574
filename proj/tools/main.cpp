#include "cli/commands.hpp"

int main(int argc, char** argv) { return curvedcp::cli::run(argc, argv); }
