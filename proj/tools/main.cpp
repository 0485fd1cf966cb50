#include "weylinc/harness.hpp"

int main(int argc, char** argv) { return weylinc::run_cli(argc, argv); }
