#ifndef FREEHEDRA_TOOLS_CLI_HPP
#define FREEHEDRA_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace freehedra::cli {

// Exit codes of the command-line tool.
enum Exit : int {
    kOk = 0,
    kViolated = 1,  // property fails, witness emitted
    kUsage = 2,
    kResource = 3,
};

// Bounds read from FREEHEDRA_MAX_ENUM, FREEHEDRA_MAX_CERT and
// FREEHEDRA_MAX_ASSOC.
struct Bounds {
    int enumeration = 8;    // freehedron n for faces / lattice
    int certification = 6;  // freehedron n for check-short, supdim, audit, series
    int associahedron = 6;  // leaves
};

// Throws std::invalid_argument on a malformed or out-of-range value.
Bounds bounds_from_env();

// args excludes the program name. Output goes to `out` unless --output is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace freehedra::cli

#endif
