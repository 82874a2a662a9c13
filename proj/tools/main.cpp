#include "enttopo/cli.hpp"

int main(int argc, char** argv) { return enttopo::cli::run(argc, argv); }
