#include <valsym/exception.hh>
#include <valsym/symmetry.hh>

#include <algorithm>

using std::size_t;
using std::vector;

namespace valsym
{
    auto adjacent_generators(const ValueClassPartition & p, Value m) -> SymmetrySet
    {
        p.check_within(m);
        SymmetrySet result{SymmetryTag::AdjacentGenerators, {}};
        for (auto & cls : p.classes())
            for (size_t k = 0; k + 1 < cls.size(); ++k)
                result.perms.push_back(Permutation::transposition(cls[k], cls[k + 1], m));
        return result;
    }

    auto full_group(const ValueClassPartition & p, Value m, size_t budget) -> SymmetrySet
    {
        p.check_within(m);
        size_t order = 1;
        for (auto & cls : p.classes())
            for (size_t k = 2; k <= cls.size(); ++k) {
                order *= k;
                if (order > budget)
                    throw BudgetExceeded("full symmetry group too large", order, budget);
            }

        SymmetrySet result{SymmetryTag::FullGroup, {}};
        result.perms.reserve(order);

        // Odometer over one arrangement per class.
        vector<vector<Value>> arrangement = p.classes();
        while (true) {
            auto images = Permutation::identity(m).images();
            for (size_t c = 0; c < arrangement.size(); ++c)
                for (size_t k = 0; k < arrangement[c].size(); ++k)
                    images[static_cast<size_t>(p.classes()[c][k] - 1)] = arrangement[c][k];
            result.perms.push_back(Permutation::from_images(images));

            size_t c = 0;
            for (; c < arrangement.size(); ++c)
                if (std::next_permutation(arrangement[c].begin(), arrangement[c].end()))
                    break;
            if (c == arrangement.size())
                break;
        }
        return result;
    }

    auto valsymbreak_holds(const Assignment & a, const SymmetrySet & s) -> bool
    {
        if (! is_total(a))
            throw ContractViolation("valsymbreak_holds needs a total assignment");
        for (auto & perm : s.perms) {
            for (auto v : a) {
                auto w = perm(v);
                if (v < w)
                    break;
                if (v > w)
                    return false;
            }
        }
        return true;
    }

    auto valsymbreak_holds(const Assignment & a, const ValueClassPartition & p) -> bool
    {
        if (! is_total(a))
            throw ContractViolation("valsymbreak_holds needs a total assignment");
        // next[c] is the position in class c of the value whose first use is due next.
        vector<size_t> next(p.class_count(), 0);
        for (auto v : a) {
            auto c = p.class_of(v);
            if (! c)
                continue;
            auto pos = *p.position_in_class(v);
            if (pos > next[*c])
                return false;
            if (pos == next[*c])
                ++next[*c];
        }
        return true;
    }

    auto lex_constraints(const SymmetrySet & s, const vector<VarId> & vars) -> vector<Constraint>
    {
        vector<Constraint> result;
        for (auto & perm : s.perms)
            result.emplace_back(LexLeqPermuted{perm, vars});
        return result;
    }

    namespace
    {
        auto all_variables(const Problem & prob) -> vector<VarId>
        {
            vector<VarId> vars(prob.variable_count());
            for (VarId v = 0; v < vars.size(); ++v)
                vars[v] = v;
            return vars;
        }
    }

    auto build_generator_lex(const Problem & prob, const ValueClassPartition & p) -> vector<Constraint>
    {
        return lex_constraints(adjacent_generators(p, prob.value_count), all_variables(prob));
    }

    auto build_precedence(const Problem & prob, const ValueClassPartition & p) -> vector<Constraint>
    {
        p.check_within(prob.value_count);
        vector<Constraint> result;
        auto vars = all_variables(prob);
        for (auto & cls : p.classes())
            if (cls.size() >= 2)
                result.emplace_back(Precedence{cls, vars});
        return result;
    }

    auto PugetEncoding::generated_constraints() const -> vector<Constraint>
    {
        vector<Constraint> result;
        for (auto c : generated)
            result.push_back(problem.constraints[c]);
        return result;
    }

    auto PugetEncoding::project(const Assignment & a) const -> Assignment
    {
        return {a.begin(), a.begin() + static_cast<long>(std::min(original_count, a.size()))};
    }

    auto build_puget(const Problem & prob, const ValueClassPartition & p, const PugetOptions & options) -> PugetEncoding
    {
        prob.validate();
        p.check_within(prob.value_count);

        PugetEncoding enc;
        enc.problem = prob;
        enc.problem.partition = p;
        enc.original_count = prob.variable_count();
        auto m = prob.value_count;

        if (options.surjection)
            for (Value j = 1; j <= m; ++j)
                enc.problem.domains.push_back(Domain{j});
        enc.channelled_count = enc.problem.variable_count();
        auto n = static_cast<Value>(enc.channelled_count);

        for (Value j = 1; j <= m; ++j) {
            enc.dual.push_back(enc.problem.variable_count());
            auto z = Domain::range(1, n);
            if (! options.surjection)
                z.insert(n + j);
            enc.problem.domains.push_back(std::move(z));
        }

        auto post = [&](Constraint c) {
            enc.generated.push_back(enc.problem.constraints.size());
            enc.problem.constraints.push_back(std::move(c));
        };

        for (Value j = 1; j <= m; ++j) {
            auto z = enc.dual_of(j);
            for (VarId x = 0; x < enc.channelled_count; ++x) {
                auto i = static_cast<Value>(x) + 1;
                post(ImpEqLeq{x, j, z, i});
                post(ImpEqEq{z, i, x, j});
            }
        }

        for (auto & cls : p.classes())
            for (size_t k = 0; k + 1 < cls.size(); ++k)
                post(StrictLess{enc.dual_of(cls[k]), enc.dual_of(cls[k + 1])});

        return enc;
    }

    auto canonical_form(const Assignment & a, const ValueClassPartition & p) -> Assignment
    {
        auto top = std::max<Value>(p.max_value(), 0);
        vector<Value> relabel(static_cast<size_t>(top) + 1, 0);
        vector<size_t> used_count(p.class_count(), 0);

        for (auto v : a) {
            auto c = p.class_of(v);
            if (! c || relabel[static_cast<size_t>(v)] != 0)
                continue;
            relabel[static_cast<size_t>(v)] = p.classes()[*c][used_count[*c]++];
        }
        for (size_t c = 0; c < p.class_count(); ++c)
            for (auto v : p.classes()[c])
                if (relabel[static_cast<size_t>(v)] == 0)
                    relabel[static_cast<size_t>(v)] = p.classes()[c][used_count[c]++];

        Assignment result(a.size());
        std::transform(a.begin(), a.end(), result.begin(), [&](Value v) {
            return p.class_of(v) ? relabel[static_cast<size_t>(v)] : v;
        });
        return result;
    }

    auto with_constraints(Problem prob, const vector<Constraint> & extra) -> Problem
    {
        prob.constraints.insert(prob.constraints.end(), extra.begin(), extra.end());
        return prob;
    }
}
