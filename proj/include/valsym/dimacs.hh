#ifndef VALSYM_DIMACS_HH
#define VALSYM_DIMACS_HH

#include <string>
#include <string_view>
#include <vector>

namespace valsym
{
    /// A literal is a non-zero variable index; negative means negated.
    using Literal = int;

    struct CNFFormula
    {
        int variable_count = 0;
        std::vector<std::vector<Literal>> clauses;

        [[nodiscard]] auto operator==(const CNFFormula &) const -> bool = default;
    };

    /// Parses DIMACS cnf. Comment lines ("c ...") are skipped, clauses may span
    /// lines and end with 0. Throws ParseError (with the offending line) on a
    /// missing or malformed header, a literal out of range, an empty clause, a
    /// clause without its terminating 0, or a clause count that differs from the header.
    [[nodiscard]] auto parse_dimacs(std::string_view text) -> CNFFormula;

    [[nodiscard]] auto to_dimacs(const CNFFormula & f) -> std::string;

    /// True iff some truth assignment satisfies every clause (exhaustive; small N only).
    [[nodiscard]] auto brute_force_satisfiable(const CNFFormula & f) -> bool;
}

#endif
