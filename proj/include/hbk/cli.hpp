#pragma once

#include <iosfwd>

namespace hbk {

// Command-line front end. Results go to out, diagnostics to err.
//
// Exit codes: 0 success; 1 parse error, usage error or unknown catalog
// name; 2 invalid tangle data (trivial, bad connectivity, infinite word
// value); 3 undecided verdict under equiv --strict. catalog verify returns
// 1 when any check fails (skipped checks are not failures).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hbk
