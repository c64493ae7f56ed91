#include "gtfa/cli.hpp"

int main(int argc, char** argv) { return gtfa::run_cli(argc, argv); }
