// Test-only reference implementations. Everything here is written straight from
// the constraint definitions and shares no code with the propagators or the
// consistency-lab enumerator.
#ifndef VALSYM_TESTS_ORACLES_HH
#define VALSYM_TESTS_ORACLES_HH

#include <valsym/constraint.hh>
#include <valsym/domain.hh>
#include <valsym/partition.hh>
#include <valsym/permutation.hh>
#include <valsym/problem.hh>
#include <valsym/propagation.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace valsym::testing
{
    using PairSet = std::set<std::pair<VarId, Value>>;

    inline auto pruned_set(const PropagationOutcome & o) -> PairSet
    {
        PairSet s;
        for (auto & p : o.prunings)
            s.emplace(p.var, p.value);
        return s;
    }

    /// Every value of the listed variables; what a wipeout amounts to.
    inline auto all_pairs(const DomainSet & d, std::size_t count) -> PairSet
    {
        PairSet s;
        for (VarId v = 0; v < count; ++v)
            for (auto x : d[v].values())
                s.emplace(v, x);
        return s;
    }

    inline auto restrict_to(const PairSet & s, std::size_t count) -> PairSet
    {
        PairSet r;
        for (auto & p : s)
            if (p.first < count)
                r.insert(p);
        return r;
    }

    /// Calls f on every assignment of `vars` drawn from d (others unassigned),
    /// last variable varying fastest.
    inline auto for_each_assignment(const DomainSet & d, const std::vector<VarId> & vars,
        const std::function<void(const Assignment &)> & f) -> void
    {
        std::vector<std::vector<Value>> vals;
        for (auto v : vars) {
            vals.push_back(d[v].values());
            if (vals.back().empty())
                return;
        }
        std::vector<std::size_t> idx(vars.size(), 0);
        Assignment a(d.size(), unassigned);
        while (true) {
            for (std::size_t k = 0; k < vars.size(); ++k)
                a[vars[k]] = vals[k][idx[k]];
            f(a);
            std::size_t k = vars.size();
            while (k > 0) {
                --k;
                if (++idx[k] < vals[k].size())
                    break;
                idx[k] = 0;
                if (k == 0)
                    return;
            }
            if (vars.empty())
                return;
        }
    }

    /// Values of `vars` with no support under `holds`.
    inline auto unsupported(const DomainSet & d, const std::vector<VarId> & vars, const std::function<bool(const Assignment &)> & holds)
        -> PairSet
    {
        PairSet seen;
        for_each_assignment(d, vars, [&](const Assignment & a) {
            if (holds(a))
                for (auto v : vars)
                    seen.emplace(v, a[v]);
        });
        PairSet result;
        for (auto v : vars)
            for (auto x : d[v].values())
                if (! seen.count({v, x}))
                    result.emplace(v, x);
        return result;
    }

    // Independent checkers, written from the definitions.

    inline auto lex_leq(const std::vector<Value> & a, const std::vector<Value> & b) -> bool
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) || a == b;
    }

    /// min{i | X_i = j or i = n+1} < min{i | X_i = k or i = n+2} for all j < k in the class.
    inline auto precedence_literal(const std::vector<Value> & cls, const std::vector<Value> & xs) -> bool
    {
        auto n = xs.size();
        for (std::size_t j = 0; j < cls.size(); ++j)
            for (std::size_t k = j + 1; k < cls.size(); ++k) {
                std::size_t fj = n + 1, fk = n + 2;
                for (std::size_t i = n; i-- > 0;) {
                    if (xs[i] == cls[j])
                        fj = i + 1;
                    if (xs[i] == cls[k])
                        fk = i + 1;
                }
                if (! (fj < fk))
                    return false;
            }
        return true;
    }

    inline auto independent_check(const Constraint & c, const Assignment & a) -> bool
    {
        auto pick = [&](const std::vector<VarId> & vars) {
            std::vector<Value> r;
            for (auto v : vars)
                r.push_back(a[v]);
            return r;
        };
        auto odd = [](Value v) { return v % 2 == 1; };
        auto par = [&](Value v, Parity p) { return odd(v) == (p == Parity::Odd); };

        if (auto p = c.get_if<LexLeqPermuted>()) {
            auto xs = pick(p->vars);
            auto ys = xs;
            for (auto & y : ys)
                y = p->perm(y);
            return lex_leq(xs, ys);
        }
        if (auto p = c.get_if<Precedence>())
            return precedence_literal(p->values, pick(p->vars));
        if (auto p = c.get_if<ImpEqLeq>())
            return a[p->x] == p->j ? a[p->z] <= p->i : true;
        if (auto p = c.get_if<ImpEqEq>())
            return a[p->z] == p->i ? a[p->x] == p->j : true;
        if (auto p = c.get_if<StrictLess>())
            return a[p->lhs] < a[p->rhs];
        if (auto p = c.get_if<DisjunctionEq>()) {
            auto xs = pick(p->vars);
            return std::count(xs.begin(), xs.end(), p->value) > 0;
        }
        if (auto p = c.get_if<ParityLink>())
            return par(a[p->cond], p->cond_parity) ? par(a[p->target], p->target_parity) : true;
        if (auto p = c.get_if<AtLeastNValues>()) {
            std::set<Value> s;
            for (VarId v = 0; v < p->prefix; ++v)
                s.insert(a[v]);
            return s.size() == p->distinct;
        }
        if (auto p = c.get_if<Conditional>())
            return par(a[p->cond], p->parity) ? independent_check(*p->inner, a) : true;
        return false;
    }

    /// Solutions by a second enumerator: last variable most significant, values
    /// descending, full check only at the leaves. Returned sorted.
    inline auto solutions_reverse_order(const std::vector<Constraint> & constraints, const DomainSet & d) -> std::vector<Assignment>
    {
        std::vector<Assignment> result;
        Assignment a(d.size(), unassigned);
        std::function<void(std::size_t)> rec = [&](std::size_t remaining) {
            if (remaining == 0) {
                bool ok = true;
                for (auto & c : constraints)
                    ok = ok && independent_check(c, a);
                if (ok)
                    result.push_back(a);
                return;
            }
            auto v = remaining - 1;
            auto vals = d[v].values();
            for (auto it = vals.rbegin(); it != vals.rend(); ++it) {
                a[v] = *it;
                rec(remaining - 1);
            }
            a[v] = unassigned;
        };
        rec(d.size());
        std::sort(result.begin(), result.end());
        return result;
    }

    /// Every class-respecting permutation of 1..m, by brute force over all
    /// permutations of 1..m.
    inline auto class_group_by_filter(const ValueClassPartition & p, Value m) -> std::vector<Permutation>
    {
        std::vector<Value> images(static_cast<std::size_t>(m));
        for (Value v = 1; v <= m; ++v)
            images[static_cast<std::size_t>(v - 1)] = v;
        std::vector<Permutation> result;
        do {
            bool ok = true;
            for (Value v = 1; v <= m && ok; ++v) {
                auto w = images[static_cast<std::size_t>(v - 1)];
                ok = p.class_of(v) == p.class_of(w) && (p.class_of(v) || v == w);
            }
            if (ok)
                result.push_back(Permutation::from_images(images));
        } while (std::next_permutation(images.begin(), images.end()));
        return result;
    }

    /// Lex-least member of the orbit of `a` under `group`.
    inline auto orbit_min(const Assignment & a, const std::vector<Permutation> & group) -> Assignment
    {
        auto best = a;
        for (auto & g : group)
            best = std::min(best, g.apply(a));
        return best;
    }

    // Random instance helpers.

    using Rng = std::mt19937_64;

    inline auto uniform(Rng & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    /// Non-empty random subset of 1..m.
    inline auto random_domain(Rng & rng, Value m, double keep = 0.6) -> Domain
    {
        Domain d(m);
        std::bernoulli_distribution coin(keep);
        for (Value v = 1; v <= m; ++v)
            if (coin(rng))
                d.insert(v);
        if (d.empty())
            d.insert(uniform(rng, 1, m));
        return d;
    }

    inline auto random_domains(Rng & rng, std::size_t n, Value m, double keep = 0.6) -> DomainSet
    {
        DomainSet d;
        for (std::size_t i = 0; i < n; ++i)
            d.push_back(random_domain(rng, m, keep));
        return d;
    }

    /// Random partition of 1..m into classes of consecutive values.
    inline auto random_partition(Rng & rng, Value m) -> ValueClassPartition
    {
        std::vector<std::vector<Value>> classes;
        std::vector<Value> current;
        for (Value v = 1; v <= m; ++v) {
            current.push_back(v);
            if (v == m || uniform(rng, 0, 2) == 0) {
                classes.push_back(current);
                current.clear();
            }
        }
        return ValueClassPartition{classes};
    }

    inline auto random_permutation(Rng & rng, Value m) -> Permutation
    {
        std::vector<Value> images;
        for (Value v = 1; v <= m; ++v)
            images.push_back(v);
        std::shuffle(images.begin(), images.end(), rng);
        return Permutation::from_images(images);
    }
}

#endif
