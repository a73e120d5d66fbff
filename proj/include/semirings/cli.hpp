#pragma once

#include <ostream>

namespace semirings::cli {

// Subcommands: analyze, catalog, enumerate, verify, export.
// Exit status: 0 success, 1 verification failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semirings::cli
