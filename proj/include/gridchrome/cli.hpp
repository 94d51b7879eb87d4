#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridchrome::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,            ///< success, Sat, Holds
        exit_negative = 1,      ///< Unsat, Violated, deficient coloring
        exit_usage = 2,         ///< bad arguments, malformed input, I/O failure
        exit_resource = 3,      ///< node, time or state budget exhausted
        exit_internal = 4       ///< engines disagreed or a witness failed validation
    };

    /// Runs the gridchrome command line. args excludes the program name;
    /// "-" as a coloring path means `in`. Reads GRIDCHROME_THREADS when
    /// --threads is absent.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
