#ifndef VALSYM_PROBLEM_HH
#define VALSYM_PROBLEM_HH

#include <valsym/constraint.hh>
#include <valsym/domain.hh>
#include <valsym/partition.hh>

#include <optional>
#include <vector>

namespace valsym
{
    /// Variables with finite domains plus constraints. Builders may append dual
    /// variables after the original ones; to the engine they are ordinary variables.
    struct Problem
    {
        /// Largest value an original variable may take.
        Value value_count = 0;
        DomainSet domains;
        std::vector<Constraint> constraints;
        std::optional<ValueClassPartition> partition;

        [[nodiscard]] auto variable_count() const -> std::size_t { return domains.size(); }

        /// Throws InvalidProblem if a scope mentions a missing variable or the
        /// partition uses values outside 1..value_count.
        auto validate() const -> void;
    };

    /// Problem with n variables over {1..m}, no constraints.
    [[nodiscard]] auto make_problem(std::size_t n, Value m) -> Problem;

    /// True iff every constraint accepts the total assignment `a`.
    /// Throws ContractViolation if `a` is partial or has the wrong size.
    [[nodiscard]] auto is_solution(const Problem & problem, const Assignment & a) -> bool;

    /// True iff every constraint whose scope is fully assigned in `a` accepts it.
    [[nodiscard]] auto is_consistent_partial(const std::vector<Constraint> & constraints, const Assignment & a) -> bool;
}

#endif
