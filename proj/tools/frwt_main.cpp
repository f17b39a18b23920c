#include "commands.hpp"

int main(int argc, char** argv) { return frwt::cli::run(argc, argv); }
