#include "bandspec/cli.hpp"

int main(int argc, char** argv) { return bandspec::run_cli(argc, argv); }
