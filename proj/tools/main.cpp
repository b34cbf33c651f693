#include "hexdual/cli.hpp"

int main(int argc, char** argv) { return hexdual::run_cli(argc, argv); }
