#include <valsym/exception.hh>
#include <valsym/propagation.hh>
#include <valsym/search.hh>

#include <algorithm>

using std::size_t;
using std::vector;

namespace valsym
{
    auto ge_tree_candidates(const Assignment & partial, VarId x, const DomainSet & d, const ValueClassPartition & p) -> vector<Value>
    {
        if (x < partial.size() && partial[x] != unassigned)
            throw ContractViolation("ge_tree_candidates on an assigned variable");

        vector<vector<char>> used(p.class_count());
        for (size_t c = 0; c < p.class_count(); ++c)
            used[c].assign(p.classes()[c].size(), 0);
        for (auto v : partial)
            if (auto c = p.class_of(v))
                used[*c][*p.position_in_class(v)] = 1;

        vector<Value> fresh(p.class_count(), unassigned);
        for (size_t c = 0; c < p.class_count(); ++c)
            for (size_t k = 0; k < used[c].size(); ++k)
                if (! used[c][k]) {
                    fresh[c] = p.classes()[c][k];
                    break;
                }

        vector<Value> result;
        d[x].for_each([&](Value v) {
            auto c = p.class_of(v);
            if (! c || used[*c][*p.position_in_class(v)] || fresh[*c] == v)
                result.push_back(v);
        });
        return result;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        class Searcher
        {
        public:
            Searcher(const Problem & prob, const Strategy & s, Goal goal) :
                _prob(prob),
                _strategy(s),
                _goal(goal),
                _engine(prob.constraints),
                _start(Clock::now())
            {
            }

            auto run(DomainSet d) -> SearchResult
            {
                node(std::move(d), std::nullopt, 0);
                _result.stats.wall_time = Clock::now() - _start;
                return std::move(_result);
            }

        private:
            auto singletons(const DomainSet & d) const -> Assignment
            {
                Assignment a(d.size(), unassigned);
                for (VarId v = 0; v < d.size(); ++v)
                    if (d[v].is_singleton())
                        a[v] = d[v].min();
                return a;
            }

            auto choose(const DomainSet & d) const -> std::optional<VarId>
            {
                std::optional<VarId> best;
                for (VarId v = 0; v < d.size(); ++v) {
                    auto s = d[v].size();
                    if (s <= 1)
                        continue;
                    if (_strategy.var_order == VarOrder::Lex)
                        return v;
                    if (! best || s < d[*best].size())
                        best = v;
                }
                return best;
            }

            auto out_of_time() -> bool
            {
                if (! _strategy.time_limit)
                    return false;
                if ((_result.stats.nodes & 1023) == 0 && Clock::now() - _start > *_strategy.time_limit)
                    _result.stats.completed = false;
                return ! _result.stats.completed;
            }

            auto leaf(bool failed, size_t depth) -> void
            {
                if (failed && depth == 0)
                    return;
                ++_result.stats.branches;
                if (failed)
                    ++_result.stats.backtracks;
            }

            // Returns false to stop the whole search.
            auto node(DomainSet d, std::optional<VarId> decided, size_t depth) -> bool
            {
                ++_result.stats.nodes;
                if (out_of_time())
                    return false;
                if (_strategy.on_node)
                    _strategy.on_node(singletons(d));

                _log.clear();
                bool ok;
                if (decided) {
                    VarId changed[] = {*decided};
                    ok = _engine.run_from(d, changed, &_log);
                }
                else
                    ok = ! any_empty(d) && _engine.run(d, &_log);
                _result.stats.prunings += _log.size();
                if (! ok) {
                    leaf(true, depth);
                    return true;
                }

                auto var = choose(d);
                if (! var) {
                    auto a = singletons(d);
                    if (! is_solution(_prob, a)) {
                        leaf(true, depth);
                        return true;
                    }
                    leaf(false, depth);
                    ++_result.stats.solutions;
                    if (_goal != Goal::Count)
                        _result.solutions.push_back(std::move(a));
                    return _goal != Goal::First;
                }

                vector<Value> candidates;
                if (_strategy.mode == SearchMode::GeTree)
                    candidates = ge_tree_candidates(singletons(d), *var, d, *_prob.partition);
                else
                    candidates = d[*var].values();

                if (candidates.empty()) {
                    leaf(true, depth);
                    return true;
                }

                for (auto v : candidates) {
                    auto child = d;
                    child[*var].assign(v);
                    if (! node(std::move(child), var, depth + 1))
                        return false;
                }
                return true;
            }

            const Problem & _prob;
            const Strategy & _strategy;
            Goal _goal;
            PropagationEngine _engine;
            Clock::time_point _start;
            SearchResult _result;
            vector<Pruning> _log;
        };
    }

    auto solve(const Problem & prob, const DomainSet & d, const Strategy & s, Goal goal) -> SearchResult
    {
        prob.validate();
        if (d.size() != prob.variable_count())
            throw ContractViolation("domain set does not match the problem's variable count");
        if (s.mode == SearchMode::GeTree && ! prob.partition)
            throw ContractViolation("GE-tree search needs a value class partition");
        return Searcher(prob, s, goal).run(d);
    }

    auto to_string(VarOrder o) -> std::string
    {
        return o == VarOrder::Lex ? "lex" : "min-domain";
    }

    auto to_string(SearchMode m) -> std::string
    {
        return m == SearchMode::Static ? "static" : "ge-tree";
    }
}
