#include "nelson/cli_app.hpp"

int main(int argc, char** argv) { return nelson::run_cli(argc, argv); }
