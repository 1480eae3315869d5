#include "ptmorse/cli.hpp"

int main(int argc, char** argv) { return ptmorse::cli::run(argc, argv); }
