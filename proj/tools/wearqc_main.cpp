#include "wearqc/cli.hpp"

int main(int argc, char** argv) { return wearqc::run(argc, argv); }
