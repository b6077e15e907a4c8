#pragma once

#include <ostream>

namespace partcat::cli {

// Parses argv and runs one verb. Returns 0 iff every internal cross-check
// passed, 1 on a failed check, 2 on bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace partcat::cli
