#include "ntx/cli.hpp"

int main(int argc, char** argv) { return ntx::cli::main_entry(argc, argv); }
