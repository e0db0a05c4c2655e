#include "confdet/cli.hpp"

int main(int argc, char** argv) { return confdet::cli::run(argc, argv); }
