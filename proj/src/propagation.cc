#include <valsym/exception.hh>
#include <valsym/propagation.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

using std::pair;
using std::size_t;
using std::span;
using std::vector;

namespace valsym
{
    auto PropagationOutcome::pruned_pairs() const -> vector<pair<VarId, Value>>
    {
        vector<pair<VarId, Value>> result;
        result.reserve(prunings.size());
        for (auto & p : prunings)
            result.emplace_back(p.var, p.value);
        std::sort(result.begin(), result.end());
        return result;
    }

    PropagationEngine::PropagationEngine(span<const Constraint> constraints) :
        _constraints(constraints)
    {
        for (size_t c = 0; c < _constraints.size(); ++c)
            for (auto v : _constraints[c].scope()) {
                if (v >= _watchers.size())
                    _watchers.resize(v + 1);
                _watchers[v].push_back(c);
            }
    }

    auto PropagationEngine::run(DomainSet & domains, vector<Pruning> * log, const FixpointOptions & options) const -> bool
    {
        vector<size_t> queue(_constraints.size());
        std::iota(queue.begin(), queue.end(), 0);
        return run_queue(domains, std::move(queue), log, options);
    }

    auto PropagationEngine::run_from(DomainSet & domains, span<const VarId> changed, vector<Pruning> * log) const -> bool
    {
        vector<char> queued(_constraints.size(), 0);
        vector<size_t> queue;
        for (auto v : changed)
            if (v < _watchers.size())
                for (auto c : _watchers[v])
                    if (! queued[c]) {
                        queued[c] = 1;
                        queue.push_back(c);
                    }
        return run_queue(domains, std::move(queue), log, {});
    }

    auto PropagationEngine::run_queue(DomainSet & domains, vector<size_t> initial, vector<Pruning> * log,
        const FixpointOptions & options) const -> bool
    {
        for (auto & c : _constraints)
            for (auto v : c.scope())
                if (v >= domains.size())
                    throw ContractViolation("domain set too small for constraint " + c.to_string());

        if (any_empty(domains))
            return false;

        std::optional<std::mt19937_64> rng;
        if (options.shuffle_seed) {
            rng.emplace(*options.shuffle_seed);
            std::shuffle(initial.begin(), initial.end(), *rng);
        }

        vector<char> queued(_constraints.size(), 0);
        std::deque<size_t> queue;
        for (auto c : initial) {
            queued[c] = 1;
            queue.push_back(c);
        }

        vector<VarId> changed;
        while (! queue.empty()) {
            size_t c;
            if (rng) {
                auto pick = std::uniform_int_distribution<size_t>(0, queue.size() - 1)(*rng);
                c = queue[pick];
                queue.erase(queue.begin() + static_cast<long>(pick));
            }
            else {
                c = queue.front();
                queue.pop_front();
            }
            queued[c] = 0;

            // Stop at the first emptied domain; the rest of a failing removal list is moot.
            changed.clear();
            for (auto & [var, value] : filter(_constraints[c], domains))
                if (domains[var].erase(value)) {
                    if (log)
                        log->push_back({var, value, c});
                    if (domains[var].empty())
                        return false;
                    if (changed.empty() || changed.back() != var)
                        changed.push_back(var);
                }

            for (auto v : changed)
                for (auto w : _watchers[v])
                    if (w != c && ! queued[w]) {
                        queued[w] = 1;
                        queue.push_back(w);
                    }
        }
        return true;
    }

    auto propagate_fixpoint(const Problem & problem, DomainSet domains, const FixpointOptions & options) -> PropagationOutcome
    {
        problem.validate();
        if (domains.size() != problem.variable_count())
            throw ContractViolation("domain set does not match the problem's variable count");
        return propagate_fixpoint(span<const Constraint>{problem.constraints}, std::move(domains), options);
    }

    auto propagate_fixpoint(span<const Constraint> constraints, DomainSet domains, const FixpointOptions & options) -> PropagationOutcome
    {
        PropagationOutcome out;
        PropagationEngine engine(constraints);
        out.wipeout = ! engine.run(domains, &out.prunings, options);
        out.final_domains = std::move(domains);
        return out;
    }
}
