#ifndef VALSYM_PROPAGATION_HH
#define VALSYM_PROPAGATION_HH

#include <valsym/problem.hh>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace valsym
{
    /// Cause recorded for prunings that do not come from a single posted constraint.
    inline constexpr std::size_t oracle_cause = std::numeric_limits<std::size_t>::max();
    inline constexpr std::size_t singleton_cause = oracle_cause - 1;

    struct Pruning
    {
        VarId var;
        Value value;
        /// Index of the constraint whose propagator removed the value, or one of the
        /// *_cause sentinels.
        std::size_t cause;

        [[nodiscard]] auto operator==(const Pruning &) const -> bool = default;
    };

    /// Replaying `prunings` in order on the input domains yields `final_domains`.
    /// A wipeout leaves at least one final domain empty.
    struct PropagationOutcome
    {
        std::vector<Pruning> prunings;
        bool wipeout = false;
        DomainSet final_domains;

        /// (var, value) pairs removed, sorted, without causes.
        [[nodiscard]] auto pruned_pairs() const -> std::vector<std::pair<VarId, Value>>;
    };

    /// Values a single constraint's propagator would remove from `d`, computed
    /// against `d` as given. Empty for AtLeastNValues, which has no propagator.
    [[nodiscard]] auto filter(const Constraint & c, const DomainSet & d) -> std::vector<std::pair<VarId, Value>>;

    /// One call of the constraint's own propagator, as an outcome with cause 0.
    [[nodiscard]] auto propagate(const Constraint & c, const DomainSet & d) -> PropagationOutcome;

    // Named entry points. Each throws ContractViolation if handed the wrong kind.
    [[nodiscard]] auto propagate_lex_permuted(const Constraint & c, const DomainSet & d) -> PropagationOutcome;
    [[nodiscard]] auto propagate_precedence(const Constraint & c, const DomainSet & d) -> PropagationOutcome;
    [[nodiscard]] auto propagate_binary(const Constraint & c, const DomainSet & d) -> PropagationOutcome;
    [[nodiscard]] auto propagate_disjunction_eq(const Constraint & c, const DomainSet & d) -> PropagationOutcome;
    [[nodiscard]] auto propagate_conditional(const Constraint & c, const DomainSet & d) -> PropagationOutcome;

    /// True iff every value of cond's domain has the parity, and it is non-empty.
    [[nodiscard]] auto parity_entailed(const Domain & cond, Parity parity) -> bool;

    struct FixpointOptions
    {
        /// When set, the initial queue is shuffled and the next constraint is drawn
        /// at random. Used to check that the fixpoint does not depend on scheduling.
        std::optional<std::uint64_t> shuffle_seed;
    };

    /// Runs a set of constraints to mutual fixpoint. Watch lists are built once, so
    /// one engine can be reused on many domain sets, e.g. at every search node.
    class PropagationEngine
    {
    public:
        explicit PropagationEngine(std::span<const Constraint> constraints);

        /// Propagates every constraint. Prunings are appended to `log` when given.
        /// Returns false on wipeout.
        auto run(DomainSet & domains, std::vector<Pruning> * log = nullptr, const FixpointOptions & options = {}) const -> bool;

        /// As run(), but starts with only the constraints watching `changed` queued.
        auto run_from(DomainSet & domains, std::span<const VarId> changed, std::vector<Pruning> * log = nullptr) const -> bool;

    private:
        auto run_queue(DomainSet & domains, std::vector<std::size_t> queue, std::vector<Pruning> * log,
            const FixpointOptions & options) const -> bool;

        std::span<const Constraint> _constraints;
        std::vector<std::vector<std::size_t>> _watchers;
    };

    [[nodiscard]] auto propagate_fixpoint(const Problem & problem, DomainSet domains, const FixpointOptions & options = {})
        -> PropagationOutcome;

    [[nodiscard]] auto propagate_fixpoint(std::span<const Constraint> constraints, DomainSet domains,
        const FixpointOptions & options = {}) -> PropagationOutcome;
}

#endif
