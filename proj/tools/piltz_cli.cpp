#include "piltz/experiment.hpp"

int main(int argc, char** argv) { return piltz::cli_main(argc, argv); }
