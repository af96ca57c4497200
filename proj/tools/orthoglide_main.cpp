#include "orthoglide/cli.hpp"

int main(int argc, char** argv) { return orthoglide::cli::run(argc, argv); }
