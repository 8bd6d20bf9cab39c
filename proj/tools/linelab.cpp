#include "linelab/cli.hpp"

int main(int argc, char** argv) { return linelab::run_cli(argc, argv); }
