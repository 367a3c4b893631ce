#include "exotic/cli.hpp"

int main(int argc, char** argv) { return exotic::cli::run(argc, argv); }
