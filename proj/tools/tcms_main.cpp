#include "tcms/cli.hpp"

int main(int argc, char** argv) { return tcms::cli_main(argc, argv); }
