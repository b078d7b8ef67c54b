#ifndef VALSYM_CLI_HH
#define VALSYM_CLI_HH

#include <iosfwd>

namespace valsym::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_failure = 1;
    inline constexpr int exit_usage = 2;
    inline constexpr int exit_budget = 3;
    inline constexpr int exit_unsatisfiable = 10;

    /// Runs one command line. argv[0] is the program name.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
