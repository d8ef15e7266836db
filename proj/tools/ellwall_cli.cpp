#include "ellwall/cli.hpp"

int main(int argc, char** argv) { return ellwall::run(argc, argv); }
