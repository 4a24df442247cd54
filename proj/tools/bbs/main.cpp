#include "cli.hpp"

int main(int argc, char** argv) { return bbsrsk::cli::main_entry(argc, argv); }
