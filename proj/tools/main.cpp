#include "recipstab/cli.hpp"

int main(int argc, char** argv) { return recipstab::run_cli(argc, argv); }
