#include <valsym/consistency.hh>
#include <valsym/exception.hh>

#include <algorithm>

using std::function;
using std::pair;
using std::size_t;
using std::span;
using std::vector;

namespace valsym
{
    namespace
    {
        // Depth-first enumeration over `order`, checking each constraint as soon as
        // its last scope variable is set. `visit` returns false to stop early.
        class Enumerator
        {
        public:
            Enumerator(span<const Constraint> constraints, vector<VarId> order, const DomainSet & d, size_t budget,
                const char * what) :
                _constraints(constraints),
                _order(std::move(order)),
                _domains(d),
                _checks(_order.size())
            {
                DomainSet enumerated;
                for (auto v : _order)
                    enumerated.push_back(d[v]);
                if (auto product = search_space_size(enumerated); product > budget)
                    throw BudgetExceeded(what, product, budget);

                vector<size_t> position(d.size(), _order.size());
                for (size_t k = 0; k < _order.size(); ++k)
                    position[_order[k]] = k;
                for (auto & c : _constraints) {
                    size_t last = 0;
                    for (auto v : c.scope()) {
                        if (position[v] == _order.size())
                            throw ContractViolation("enumeration order misses a scope variable of " + c.to_string());
                        last = std::max(last, position[v]);
                    }
                    _checks[last].push_back(&c);
                }
                _current.assign(d.size(), unassigned);
            }

            template <typename Visit>
            auto run(Visit && visit) -> void
            {
                if (_order.empty()) {
                    if (std::all_of(_constraints.begin(), _constraints.end(), [&](auto & c) { return c.check(_current); }))
                        visit(_current);
                    return;
                }
                descend(0, visit);
            }

        private:
            template <typename Visit>
            auto descend(size_t depth, Visit & visit) -> bool
            {
                auto var = _order[depth];
                for (auto v : _domains[var].values()) {
                    _current[var] = v;
                    bool ok = std::all_of(_checks[depth].begin(), _checks[depth].end(), [&](const Constraint * c) { return c->check(_current); });
                    if (! ok)
                        continue;
                    if (depth + 1 == _order.size()) {
                        if (! visit(_current)) {
                            _current[var] = unassigned;
                            return false;
                        }
                    }
                    else if (! descend(depth + 1, visit)) {
                        _current[var] = unassigned;
                        return false;
                    }
                }
                _current[var] = unassigned;
                return true;
            }

            span<const Constraint> _constraints;
            vector<VarId> _order;
            const DomainSet & _domains;
            vector<vector<const Constraint *>> _checks;
            Assignment _current;
        };

        auto joint_scope(span<const Constraint> constraints) -> vector<VarId>
        {
            vector<VarId> scope;
            for (auto & c : constraints)
                scope.insert(scope.end(), c.scope().begin(), c.scope().end());
            std::sort(scope.begin(), scope.end());
            scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
            return scope;
        }

        auto check_domains_cover(span<const Constraint> constraints, const DomainSet & d) -> void
        {
            for (auto & c : constraints)
                for (auto v : c.scope())
                    if (v >= d.size())
                        throw ContractViolation("domain set too small for constraint " + c.to_string());
        }

        auto prune_unsupported(const vector<VarId> & scope, const vector<vector<char>> & supported, const DomainSet & d)
            -> PropagationOutcome
        {
            PropagationOutcome out;
            out.final_domains = d;
            for (auto v : scope)
                for (auto val : d[v].values())
                    if (! supported[v][static_cast<size_t>(val)]) {
                        out.final_domains[v].erase(val);
                        out.prunings.push_back({v, val, oracle_cause});
                    }
            out.wipeout = any_empty(out.final_domains);
            return out;
        }

        auto support_table(const DomainSet & d) -> vector<vector<char>>
        {
            vector<vector<char>> supported(d.size());
            for (size_t v = 0; v < d.size(); ++v)
                supported[v].assign(static_cast<size_t>(std::max(d[v].max(), 0)) + 1, 0);
            return supported;
        }
    }

    auto enumerate_solutions(const Problem & prob, const DomainSet & d, size_t budget) -> vector<Assignment>
    {
        prob.validate();
        if (d.size() != prob.variable_count())
            throw ContractViolation("domain set does not match the problem's variable count");
        return enumerate_solutions(span<const Constraint>{prob.constraints}, d, budget);
    }

    auto enumerate_solutions(span<const Constraint> constraints, const DomainSet & d, size_t budget) -> vector<Assignment>
    {
        check_domains_cover(constraints, d);
        vector<VarId> order(d.size());
        for (VarId v = 0; v < d.size(); ++v)
            order[v] = v;
        vector<Assignment> result;
        Enumerator e(constraints, std::move(order), d, budget, "solution enumeration");
        e.run([&](const Assignment & a) {
            result.push_back(a);
            return true;
        });
        return result;
    }

    auto brute_force_gac(span<const Constraint> constraints, const DomainSet & d, size_t budget) -> PropagationOutcome
    {
        check_domains_cover(constraints, d);
        auto scope = joint_scope(constraints);
        auto supported = support_table(d);
        Enumerator e(constraints, scope, d, budget, "brute-force GAC");
        e.run([&](const Assignment & a) {
            for (auto v : scope)
                supported[v][static_cast<size_t>(a[v])] = 1;
            return true;
        });
        // A single pass is already a fixpoint: supports are joint assignments that
        // survive the removal of unsupported values.
        return prune_unsupported(scope, supported, d);
    }

    auto brute_force_gac(const vector<VarId> & scope, const function<bool(const Assignment &)> & holds, const DomainSet & d,
        size_t budget) -> PropagationOutcome
    {
        for (auto v : scope)
            if (v >= d.size())
                throw ContractViolation("domain set too small for predicate scope");
        auto supported = support_table(d);
        Enumerator e({}, scope, d, budget, "brute-force GAC");
        e.run([&](const Assignment & a) {
            if (holds(a))
                for (auto v : scope)
                    supported[v][static_cast<size_t>(a[v])] = 1;
            return true;
        });
        return prune_unsupported(scope, supported, d);
    }

    auto has_support(span<const Constraint> constraints, const DomainSet & d, VarId var, Value value, size_t budget) -> bool
    {
        check_domains_cover(constraints, d);
        if (var >= d.size())
            throw ContractViolation("has_support on a missing variable");
        if (! d[var].contains(value))
            return false;
        auto restricted = d;
        restricted[var].assign(value);
        auto scope = joint_scope(constraints);
        if (! std::binary_search(scope.begin(), scope.end(), var))
            scope.insert(std::upper_bound(scope.begin(), scope.end(), var), var);
        bool found = false;
        Enumerator e(constraints, scope, restricted, budget, "support search");
        e.run([&](const Assignment &) {
            found = true;
            return false;
        });
        return found;
    }

    auto enforce_sac(const Problem & prob, const DomainSet & d) -> PropagationOutcome
    {
        prob.validate();
        return enforce_sac(span<const Constraint>{prob.constraints}, d);
    }

    auto enforce_sac(span<const Constraint> constraints, const DomainSet & d) -> PropagationOutcome
    {
        for (auto & c : constraints)
            if (c.arity() > 2)
                throw ContractViolation("singleton arc consistency is defined on binary constraints, got " + c.to_string());

        PropagationOutcome out;
        out.final_domains = d;
        auto & doms = out.final_domains;
        PropagationEngine engine(constraints);

        if (! engine.run(doms, &out.prunings)) {
            out.wipeout = true;
            return out;
        }

        bool changed = true;
        while (changed) {
            changed = false;
            for (VarId var = 0; var < doms.size(); ++var)
                for (auto v : doms[var].values()) {
                    if (! doms[var].contains(v))
                        continue;
                    auto probe = doms;
                    probe[var].assign(v);
                    VarId probed[] = {var};
                    if (engine.run_from(probe, probed))
                        continue;

                    changed = true;
                    doms[var].erase(v);
                    out.prunings.push_back({var, v, singleton_cause});
                    if (doms[var].empty() || ! engine.run_from(doms, probed, &out.prunings)) {
                        out.wipeout = true;
                        return out;
                    }
                }
        }
        return out;
    }

    namespace
    {
        class KConsistencyChecker
        {
        public:
            KConsistencyChecker(const Problem & prob, size_t budget) :
                _prob(prob),
                _budget(budget),
                _watch(prob.variable_count()),
                _current(prob.variable_count(), unassigned)
            {
                for (auto & c : prob.constraints)
                    for (auto v : c.scope())
                        _watch[v].push_back(&c);
            }

            auto check(size_t k) -> ConsistencyReport
            {
                ConsistencyReport report;
                report.level = k;
                if (k == 0)
                    return report;
                auto n = _prob.variable_count();
                auto subset_size = k - 1;
                if (subset_size >= n)
                    return report;

                // Subsets of size k-1 in lexicographic order of indices.
                vector<VarId> subset(subset_size);
                for (size_t i = 0; i < subset_size; ++i)
                    subset[i] = i;
                while (true) {
                    if (auto w = check_subset(subset, 0)) {
                        report.holds = false;
                        report.witness = std::move(w);
                        return report;
                    }
                    size_t i = subset_size;
                    while (i > 0 && subset[i - 1] == n - subset_size + i - 1)
                        --i;
                    if (i == 0)
                        break;
                    ++subset[i - 1];
                    for (size_t j = i; j < subset_size; ++j)
                        subset[j] = subset[j - 1] + 1;
                }
                return report;
            }

        private:
            auto consistent_with(VarId var) const -> bool
            {
                for (auto c : _watch[var])
                    if (c->fully_assigned(_current) && ! c->check(_current))
                        return false;
                return true;
            }

            auto check_subset(const vector<VarId> & subset, size_t depth) -> std::optional<ConsistencyWitness>
            {
                if (++_visited > _budget)
                    throw BudgetExceeded("k-consistency check", _visited, _budget);

                if (depth == subset.size())
                    return try_extend(subset);

                auto var = subset[depth];
                for (auto v : _prob.domains[var].values()) {
                    _current[var] = v;
                    if (consistent_with(var))
                        if (auto w = check_subset(subset, depth + 1)) {
                            _current[var] = unassigned;
                            return w;
                        }
                }
                _current[var] = unassigned;
                return std::nullopt;
            }

            auto try_extend(const vector<VarId> & subset) -> std::optional<ConsistencyWitness>
            {
                for (VarId other = 0; other < _prob.variable_count(); ++other) {
                    if (_current[other] != unassigned)
                        continue;
                    bool extends = false;
                    for (auto v : _prob.domains[other].values()) {
                        _current[other] = v;
                        extends = consistent_with(other);
                        if (extends)
                            break;
                    }
                    _current[other] = unassigned;
                    if (! extends) {
                        ConsistencyWitness w;
                        for (auto s : subset)
                            w.assignment.emplace_back(s, _current[s]);
                        w.unextendable = other;
                        return w;
                    }
                }
                return std::nullopt;
            }

            const Problem & _prob;
            size_t _budget;
            size_t _visited = 0;
            vector<vector<const Constraint *>> _watch;
            Assignment _current;
        };
    }

    auto is_k_consistent(const Problem & prob, size_t k, size_t budget) -> ConsistencyReport
    {
        prob.validate();
        return KConsistencyChecker(prob, budget).check(k);
    }

    auto is_strongly_k_consistent(const Problem & prob, size_t k, size_t budget) -> ConsistencyReport
    {
        prob.validate();
        KConsistencyChecker checker(prob, budget);
        ConsistencyReport last;
        last.level = k;
        for (size_t j = 1; j <= k; ++j) {
            auto r = checker.check(j);
            if (! r.holds)
                return r;
        }
        return last;
    }
}
