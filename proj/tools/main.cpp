#include "cli.hpp"

int main(int argc, char** argv) { return ellipuc::cli::run(argc, argv); }
