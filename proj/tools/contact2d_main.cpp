#include "contact2d/cli.hpp"

int main(int argc, char** argv) { return contact2d::cli_main(argc, argv); }
