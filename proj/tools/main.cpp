#include "hookcsp/cli.hpp"

int main(int argc, char** argv) { return hookcsp::cli::run(argc, argv); }
