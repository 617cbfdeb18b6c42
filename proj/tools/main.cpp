#include "fwdg/harness.hpp"

int main(int argc, char** argv) { return fwdg::run_cli(argc, argv); }
