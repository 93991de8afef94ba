#include "wiman/cli.hpp"

int main(int argc, char** argv) { return wiman::cli::run_main(argc, argv); }
