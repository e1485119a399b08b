#include "combid/cli.hpp"

int main(int argc, char** argv) { return combid::run_cli(argc, argv); }
