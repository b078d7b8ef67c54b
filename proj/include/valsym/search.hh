#ifndef VALSYM_SEARCH_HH
#define VALSYM_SEARCH_HH

#include <valsym/partition.hh>
#include <valsym/problem.hh>

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace valsym
{
    enum class VarOrder
    {
        Lex,
        MinDomain
    };

    enum class SearchMode
    {
        /// Plain labelling; symmetry breaking, if any, is in the posted constraints.
        Static,
        /// Branch only on values already used plus the least unused value of each
        /// class, so that no two branches are related by a class symmetry.
        GeTree
    };

    enum class Goal
    {
        First,
        All,
        Count
    };

    struct Strategy
    {
        VarOrder var_order = VarOrder::Lex;
        SearchMode mode = SearchMode::Static;
        /// Unset means no limit. When hit, the run stops and stats.completed is false.
        std::optional<std::chrono::milliseconds> time_limit;
        /// Called at every node with the node's partial assignment (all variables
        /// with singleton domains, before the node propagates).
        std::function<void(const Assignment &)> on_node;
    };

    struct SearchStats
    {
        std::size_t nodes = 0;
        /// Root-to-leaf paths. A leaf is a wipeout, a total assignment, or an empty
        /// candidate set. A refutation by propagation at the root is not a branch.
        std::size_t branches = 0;
        /// Failed leaves.
        std::size_t backtracks = 0;
        std::size_t prunings = 0;
        std::size_t solutions = 0;
        std::chrono::nanoseconds wall_time{0};
        bool completed = true;
    };

    struct SearchResult
    {
        /// Empty for Goal::Count.
        std::vector<Assignment> solutions;
        SearchStats stats;
    };

    /// Depth-first search with the problem's constraints propagated to fixpoint at
    /// every node. GeTree mode needs problem.partition.
    [[nodiscard]] auto solve(const Problem & prob, const DomainSet & d, const Strategy & s, Goal goal) -> SearchResult;

    /// Values of dom(x) worth branching on: for each class, the class values used in
    /// `partial` plus the least unused one. Unclassed values always pass.
    [[nodiscard]] auto ge_tree_candidates(const Assignment & partial, VarId x, const DomainSet & d, const ValueClassPartition & p)
        -> std::vector<Value>;

    [[nodiscard]] auto to_string(VarOrder o) -> std::string;
    [[nodiscard]] auto to_string(SearchMode m) -> std::string;
}

#endif
