#include "virmod/cli.hpp"

int main(int argc, char** argv) { return virmod::cli::run(argc, argv); }
