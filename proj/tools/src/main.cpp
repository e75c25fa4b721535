#include "fastgym_cli/cli.hpp"

int main(int argc, char** argv) { return fastgym::cli_main(argc, argv); }
