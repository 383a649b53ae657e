#include "poslab/cli.hpp"

int main(int argc, char** argv) { return poslab::run_cli(argc, argv); }
