#include "biserial/cli.hpp"

int main(int argc, char** argv) { return biserial::run_cli(argc, argv); }
