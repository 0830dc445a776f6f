#include "wearqc/cli.hpp"

namespace wearqc {

int run(int, const char* const*) { return 0; } // wired up with subcommands below

} // namespace wearqc
