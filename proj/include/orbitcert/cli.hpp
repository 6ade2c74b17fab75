#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitcert {

// Parses `args` (without the program name), runs one subcommand and writes
// its result to `out`. Exit codes: 0 success or pass, 1 fail verdict,
// 2 usage or input error, 3 undecided certificate, 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbitcert
