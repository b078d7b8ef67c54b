#include <valsym/exception.hh>
#include <valsym/propagation.hh>

#include <algorithm>

using std::pair;
using std::size_t;
using std::vector;

namespace valsym
{
    namespace
    {
        using Removals = vector<pair<VarId, Value>>;

        // GAC for [X1..Xn] <=lex [s(X1)..s(Xn)]. Position k compares X_k with s(X_k)
        // only, so each position's values split into fixed (v = s(v)), less
        // (v < s(v)) and greater. A support is a run of fixed values followed by
        // either the end or a less value, then anything.
        auto filter_lex(const LexLeqPermuted & c, const DomainSet & d) -> Removals
        {
            auto n = c.vars.size();
            vector<char> has_fixed(n, 0), has_less(n, 0);
            for (size_t k = 0; k < n; ++k)
                d[c.vars[k]].for_each([&](Value v) {
                    auto s = c.perm(v);
                    if (s == v)
                        has_fixed[k] = 1;
                    else if (v < s)
                        has_less[k] = 1;
                });

            size_t alpha = n;
            for (size_t k = 0; k < n; ++k)
                if (! has_fixed[k]) {
                    alpha = k;
                    break;
                }

            vector<size_t> next_less(n + 1, n);
            for (size_t k = n; k-- > 0;)
                next_less[k] = (k + 1 < n && has_less[k + 1]) ? k + 1 : next_less[k + 1];
            size_t first_less = n;
            for (size_t k = 0; k < n; ++k)
                if (has_less[k]) {
                    first_less = k;
                    break;
                }

            Removals result;
            for (size_t k = 0; k < n; ++k) {
                // Decided: an earlier position can already be strictly less.
                bool decided = first_less < k && first_less <= alpha;
                bool fixed_ok = decided || (k < alpha && (alpha == n || next_less[k] <= alpha));
                bool less_ok = decided || k <= alpha;
                bool greater_ok = decided;
                d[c.vars[k]].for_each([&](Value v) {
                    auto s = c.perm(v);
                    bool ok = s == v ? fixed_ok : (v < s ? less_ok : greater_ok);
                    if (! ok)
                        result.emplace_back(c.vars[k], v);
                });
            }
            return result;
        }

        // GAC for value precedence over one class. The state after a prefix is the
        // number t of class values used so far, always the first t of the class.
        // At a position, state t can stay (a non-class value, or a class value
        // already used) or advance to t+1 (the class value at index t). Forward
        // reachability and backward completability give supports in O(n*m).
        auto filter_precedence(const Precedence & c, const DomainSet & d) -> Removals
        {
            auto n = c.vars.size();
            auto classes = c.values.size();
            auto width = classes + 1;

            // min class index present (classes if none), and whether a non-class value is present.
            vector<size_t> min_index(n, classes);
            vector<char> has_other(n, 0);
            Value lookup_cap = 0;
            for (auto v : c.values)
                lookup_cap = std::max(lookup_cap, v);
            vector<size_t> index_of(static_cast<size_t>(std::max(lookup_cap, 0)) + 1, classes);
            for (size_t s = 0; s < classes; ++s)
                if (c.values[s] >= 0)
                    index_of[static_cast<size_t>(c.values[s])] = s;
            auto idx = [&](Value v) { return (v >= 0 && v <= lookup_cap) ? index_of[static_cast<size_t>(v)] : classes; };

            for (size_t i = 0; i < n; ++i)
                d[c.vars[i]].for_each([&](Value v) {
                    auto s = idx(v);
                    if (s == classes)
                        has_other[i] = 1;
                    else
                        min_index[i] = std::min(min_index[i], s);
                });

            auto stay_ok = [&](size_t i, size_t t) { return has_other[i] || min_index[i] < t; };
            auto advance_ok = [&](size_t i, size_t t) { return t < classes && d[c.vars[i]].contains(c.values[t]); };

            vector<char> forward((n + 1) * width, 0), backward((n + 1) * width, 0);
            auto fw = [&](size_t i, size_t t) -> char & { return forward[i * width + t]; };
            auto bw = [&](size_t i, size_t t) -> char & { return backward[i * width + t]; };

            fw(0, 0) = 1;
            for (size_t i = 0; i < n; ++i)
                for (size_t t = 0; t < width; ++t)
                    if (fw(i, t)) {
                        if (stay_ok(i, t))
                            fw(i + 1, t) = 1;
                        if (advance_ok(i, t))
                            fw(i + 1, t + 1) = 1;
                    }

            for (size_t t = 0; t < width; ++t)
                bw(n, t) = 1;
            for (size_t i = n; i-- > 0;)
                for (size_t t = 0; t < width; ++t)
                    bw(i, t) = (stay_ok(i, t) && bw(i + 1, t)) || (advance_ok(i, t) && bw(i + 1, t + 1));

            Removals result;
            for (size_t i = 0; i < n; ++i) {
                // Largest state reachable before i that can also continue after i without moving.
                long stay_max = -1;
                for (size_t t = width; t-- > 0;)
                    if (fw(i, t) && bw(i + 1, t)) {
                        stay_max = static_cast<long>(t);
                        break;
                    }
                d[c.vars[i]].for_each([&](Value v) {
                    auto s = idx(v);
                    bool ok;
                    if (s == classes)
                        ok = stay_max >= 0;
                    else
                        ok = (fw(i, s) && bw(i + 1, s + 1)) || stay_max > static_cast<long>(s);
                    if (! ok)
                        result.emplace_back(c.vars[i], v);
                });
            }
            return result;
        }

        template <typename Rel>
        auto revise_pair(VarId x, VarId y, const DomainSet & d, Rel && rel) -> Removals
        {
            Removals result;
            auto xs = d[x].values(), ys = d[y].values();
            for (auto a : xs)
                if (std::none_of(ys.begin(), ys.end(), [&](Value b) { return rel(a, b); }))
                    result.emplace_back(x, a);
            for (auto b : ys)
                if (std::none_of(xs.begin(), xs.end(), [&](Value a) { return rel(a, b); }))
                    result.emplace_back(y, b);
            return result;
        }

        auto filter_strict_less(const StrictLess & c, const DomainSet & d) -> Removals
        {
            Removals result;
            auto & lhs = d[c.lhs];
            auto & rhs = d[c.rhs];
            auto rhs_max = rhs.max(), lhs_min = lhs.min();
            lhs.for_each([&](Value v) {
                if (rhs.empty() || v >= rhs_max)
                    result.emplace_back(c.lhs, v);
            });
            rhs.for_each([&](Value v) {
                if (lhs.empty() || v <= lhs_min)
                    result.emplace_back(c.rhs, v);
            });
            return result;
        }

        auto filter_disjunction(const Constraint & whole, const DisjunctionEq & c, const DomainSet & d) -> Removals
        {
            Removals result;
            const VarId * only = nullptr;
            size_t count = 0;
            for (auto & v : whole.scope())
                if (d[v].contains(c.value)) {
                    ++count;
                    only = &v;
                }
            if (count == 0) {
                for (auto v : whole.scope())
                    d[v].for_each([&](Value val) { result.emplace_back(v, val); });
            }
            else if (count == 1) {
                d[*only].for_each([&](Value val) {
                    if (val != c.value)
                        result.emplace_back(*only, val);
                });
            }
            return result;
        }

        auto filter_kind(const Constraint & c, const DomainSet & d) -> Removals;

        auto filter_conditional(const Conditional & c, const DomainSet & d) -> Removals
        {
            if (! parity_entailed(d[c.cond], c.parity))
                return {};
            return filter_kind(*c.inner, d);
        }

        auto filter_kind(const Constraint & c, const DomainSet & d) -> Removals
        {
            if (auto p = c.get_if<LexLeqPermuted>())
                return filter_lex(*p, d);
            if (auto p = c.get_if<Precedence>())
                return filter_precedence(*p, d);
            if (auto p = c.get_if<ImpEqLeq>())
                return revise_pair(p->x, p->z, d, [&](Value x, Value z) { return x != p->j || z <= p->i; });
            if (auto p = c.get_if<ImpEqEq>())
                return revise_pair(p->z, p->x, d, [&](Value z, Value x) { return z != p->i || x == p->j; });
            if (auto p = c.get_if<StrictLess>())
                return filter_strict_less(*p, d);
            if (auto p = c.get_if<DisjunctionEq>())
                return filter_disjunction(c, *p, d);
            if (auto p = c.get_if<ParityLink>())
                return revise_pair(p->cond, p->target, d, [&](Value x, Value y) {
                    return ! has_parity(x, p->cond_parity) || has_parity(y, p->target_parity);
                });
            if (auto p = c.get_if<Conditional>())
                return filter_conditional(*p, d);
            return {};
        }

        auto as_outcome(const DomainSet & d, const Removals & removals) -> PropagationOutcome
        {
            PropagationOutcome out;
            out.final_domains = d;
            for (auto & [var, value] : removals)
                if (out.final_domains[var].erase(value))
                    out.prunings.push_back({var, value, 0});
            out.wipeout = any_empty(out.final_domains);
            return out;
        }

        template <typename... Kinds>
        auto require_kind(const Constraint & c, const char * what) -> void
        {
            if (! (c.get_if<Kinds>() || ...))
                throw ContractViolation(std::string(what) + " called on " + c.name());
        }
    }

    auto parity_entailed(const Domain & cond, Parity parity) -> bool
    {
        if (cond.empty())
            return false;
        bool all = true;
        cond.for_each([&](Value v) { all = all && has_parity(v, parity); });
        return all;
    }

    auto filter(const Constraint & c, const DomainSet & d) -> vector<pair<VarId, Value>>
    {
        return filter_kind(c, d);
    }

    auto propagate(const Constraint & c, const DomainSet & d) -> PropagationOutcome
    {
        return as_outcome(d, filter_kind(c, d));
    }

    auto propagate_lex_permuted(const Constraint & c, const DomainSet & d) -> PropagationOutcome
    {
        require_kind<LexLeqPermuted>(c, "propagate_lex_permuted");
        return propagate(c, d);
    }

    auto propagate_precedence(const Constraint & c, const DomainSet & d) -> PropagationOutcome
    {
        require_kind<Precedence>(c, "propagate_precedence");
        return propagate(c, d);
    }

    auto propagate_binary(const Constraint & c, const DomainSet & d) -> PropagationOutcome
    {
        require_kind<ImpEqLeq, ImpEqEq, StrictLess, ParityLink>(c, "propagate_binary");
        return propagate(c, d);
    }

    auto propagate_disjunction_eq(const Constraint & c, const DomainSet & d) -> PropagationOutcome
    {
        require_kind<DisjunctionEq>(c, "propagate_disjunction_eq");
        return propagate(c, d);
    }

    auto propagate_conditional(const Constraint & c, const DomainSet & d) -> PropagationOutcome
    {
        require_kind<Conditional>(c, "propagate_conditional");
        return propagate(c, d);
    }
}
