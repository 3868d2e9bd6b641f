#include "specenv/cli.hpp"

int main(int argc, char** argv) { return specenv::cli::run(argc, argv); }
