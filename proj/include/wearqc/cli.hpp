#pragma once

namespace wearqc {

/// Entry point behind the `wearqc` binary. Returns 0 on success, 1 on user
/// error (bad arguments, unreadable input), 2 on internal error.
int run(int argc, const char* const* argv);

} // namespace wearqc
