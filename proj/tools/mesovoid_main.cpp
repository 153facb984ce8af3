#include "mesovoid/cli.hpp"

int main(int argc, char** argv) { return mesovoid::cli_main(argc, argv); }
