#include "cli.hpp"

int main(int argc, char** argv) { return qsdc::cli::main_impl(argc, argv); }
