#include "fuzzvec/cli.hpp"

int main(int argc, char** argv) { return fuzzvec::cli::run(argc, argv); }
