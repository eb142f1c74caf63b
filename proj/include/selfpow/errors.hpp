#pragma once

#include <stdexcept>

namespace selfpow {

// Raised when a computation would exceed a configured work or memory cap.
// The message names the flag that raises the cap. Distinct from domain
// errors so the CLI can map it to its own exit code.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unwritable output path or failed file write.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace selfpow
