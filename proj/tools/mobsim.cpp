#include "mobsim/cli.hpp"

int main(int argc, char** argv) { return mobsim::cli_main(argc, argv); }
