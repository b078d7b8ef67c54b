#ifndef VALSYM_CONSISTENCY_HH
#define VALSYM_CONSISTENCY_HH

#include <valsym/propagation.hh>

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace valsym
{
    /// Oracles refuse (BudgetExceeded) rather than enumerate more total assignments
    /// than this, or visit more partial assignments when checking k-consistency.
    inline constexpr std::size_t default_budget = 10'000'000;

    /// All total assignments drawn from `d` satisfying every constraint of `prob`, in
    /// lexicographic order (variable 0 most significant, values ascending).
    [[nodiscard]] auto enumerate_solutions(const Problem & prob, const DomainSet & d, std::size_t budget = default_budget)
        -> std::vector<Assignment>;

    [[nodiscard]] auto enumerate_solutions(std::span<const Constraint> constraints, const DomainSet & d,
        std::size_t budget = default_budget) -> std::vector<Assignment>;

    /// GAC on the conjunction: removes exactly the values of scope variables that
    /// occur in no assignment of the joint scope satisfying all constraints at once.
    /// Prunings carry oracle_cause.
    [[nodiscard]] auto brute_force_gac(std::span<const Constraint> constraints, const DomainSet & d,
        std::size_t budget = default_budget) -> PropagationOutcome;

    /// As above for an arbitrary predicate on `scope`. The predicate sees an
    /// assignment sized like `d` with only the scope variables set.
    [[nodiscard]] auto brute_force_gac(const std::vector<VarId> & scope, const std::function<bool(const Assignment &)> & holds,
        const DomainSet & d, std::size_t budget = default_budget) -> PropagationOutcome;

    /// True iff some assignment of the joint scope (plus var) drawn from `d` with
    /// var = value satisfies every constraint.
    [[nodiscard]] auto has_support(std::span<const Constraint> constraints, const DomainSet & d, VarId var, Value value,
        std::size_t budget = default_budget) -> bool;

    /// Singleton arc consistency. Constraints must have arity at most two
    /// (ContractViolation otherwise). Values failing their singleton probe carry
    /// singleton_cause; prunings from the AC passes carry their constraint.
    [[nodiscard]] auto enforce_sac(const Problem & prob, const DomainSet & d) -> PropagationOutcome;
    [[nodiscard]] auto enforce_sac(std::span<const Constraint> constraints, const DomainSet & d) -> PropagationOutcome;

    struct ConsistencyWitness
    {
        /// A consistent assignment of level-1 variables...
        std::vector<std::pair<VarId, Value>> assignment;
        /// ...that cannot be extended to this variable.
        VarId unextendable;
    };

    struct ConsistencyReport
    {
        std::size_t level = 0;
        bool holds = true;
        std::optional<ConsistencyWitness> witness;
    };

    /// k-consistency on the problem's own domains: every consistent assignment of
    /// every k-1 variables extends to every other variable. An assignment is
    /// consistent when it satisfies every constraint it fully instantiates.
    [[nodiscard]] auto is_k_consistent(const Problem & prob, std::size_t k, std::size_t budget = default_budget)
        -> ConsistencyReport;

    /// j-consistency for all j <= k. On failure the report's level is the first
    /// failing j.
    [[nodiscard]] auto is_strongly_k_consistent(const Problem & prob, std::size_t k, std::size_t budget = default_budget)
        -> ConsistencyReport;
}

#endif
