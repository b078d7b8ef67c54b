#include <valsym/exception.hh>
#include <valsym/instances.hh>

#include <algorithm>
#include <cstdlib>

using std::size_t;
using std::vector;

namespace valsym
{
    auto pigeonhole_model(size_t n) -> Problem
    {
        if (n < 1)
            throw InvalidProblem("pigeonhole model needs n >= 1");
        auto m = static_cast<Value>(n) + 1;
        auto prob = make_problem(n, m);
        vector<VarId> vars(n);
        for (VarId v = 0; v < n; ++v)
            vars[v] = v;
        for (Value j = 1; j <= m; ++j)
            prob.constraints.emplace_back(DisjunctionEq{j, vars});
        prob.partition = ValueClassPartition::all_interchangeable(m);
        return prob;
    }

    auto thm4_example() -> Problem
    {
        Problem prob;
        prob.value_count = 5;
        prob.domains = {Domain{1}, Domain{1, 2}, Domain{1, 3}, Domain{1, 4}, Domain{5}};
        prob.partition = ValueClassPartition::all_interchangeable(5);
        return prob;
    }

    auto thm5_example() -> Thm5Example
    {
        Thm5Example ex;
        ex.problem.value_count = 4;
        ex.problem.domains = {Domain{1}, Domain{1, 2}, Domain{1, 3}, Domain{3, 4}, Domain{2}, Domain{3}, Domain{4}};
        ex.problem.partition = ValueClassPartition::all_interchangeable(4);
        ex.dual_domains = {Domain{1}, Domain{2, 5}, Domain{3, 4, 6}, Domain{4, 7}};
        return ex;
    }

    auto thm7_base(size_t k) -> Problem
    {
        if (k < 1)
            throw InvalidProblem("thm7 family needs k >= 1");
        auto kv = static_cast<Value>(k);
        Problem prob;
        prob.value_count = 2 * (kv + 1);
        for (Value i = 1; i <= kv; ++i)
            prob.domains.push_back(Domain{i, i + 1});
        for (Value i = 1; i <= kv + 1; ++i)
            prob.domains.push_back(Domain{kv + 1 + i});
        vector<vector<Value>> pairs;
        for (Value i = 1; i <= kv + 1; ++i)
            pairs.push_back({i, kv + 1 + i});
        prob.partition = ValueClassPartition{pairs};
        return prob;
    }

    auto thm7_family(size_t k) -> PugetEncoding
    {
        auto base = thm7_base(k);
        return build_puget(base, *base.partition);
    }

    auto reduce_3sat(const CNFFormula & f) -> Reduction
    {
        auto n = f.variable_count;
        auto m = static_cast<int>(f.clauses.size());
        if (n < 1)
            throw InvalidProblem("3-SAT reduction needs at least one Boolean variable");

        Reduction r;
        auto & prob = r.problem;
        prob.value_count = 4 * n + 2;

        for (Value i = 1; i <= n; ++i)
            prob.domains.push_back(Domain{4 * i - 3, 4 * i - 2, 4 * i - 1, 4 * i});

        for (int c = 0; c < m; ++c) {
            auto & clause = f.clauses[static_cast<size_t>(c)];
            if (clause.empty() || clause.size() > 3)
                throw InvalidProblem("clause " + std::to_string(c + 1) + " has " + std::to_string(clause.size()) + " literals, need 1..3");
            Domain d;
            for (auto lit : clause) {
                auto x = std::abs(lit);
                if (lit == 0 || x > n)
                    throw InvalidProblem("clause " + std::to_string(c + 1) + " mentions variable " + std::to_string(lit));
                if (lit > 0) {
                    d.insert(4 * x - 3);
                    d.insert(4 * x - 2);
                }
                else {
                    d.insert(4 * x - 1);
                    d.insert(4 * x);
                }
            }
            prob.domains.push_back(d);
        }

        r.switch_var = prob.domains.size();
        r.odd_switch = 4 * n + 1;
        r.even_switch = 4 * n + 2;
        prob.domains.push_back(Domain{r.odd_switch, r.even_switch});

        for (VarId i = 0; i < static_cast<size_t>(n); ++i)
            prob.constraints.emplace_back(ParityLink{r.switch_var, Parity::Odd, i, Parity::Odd});
        for (VarId j = 0; j < static_cast<size_t>(m); ++j)
            prob.constraints.emplace_back(ParityLink{r.switch_var, Parity::Odd, static_cast<size_t>(n) + j, Parity::Even});
        auto un = static_cast<size_t>(n);
        prob.constraints.push_back(make_conditional(r.switch_var, Parity::Odd, AtLeastNValues{un, un + 1}));
        prob.constraints.push_back(make_conditional(r.switch_var, Parity::Even, AtLeastNValues{un, un}));

        vector<vector<Value>> pairs;
        for (Value i = 1; i <= n; ++i) {
            pairs.push_back({4 * i - 3, 4 * i - 2});
            pairs.push_back({4 * i - 1, 4 * i});
        }
        r.partition = ValueClassPartition{pairs};
        prob.partition = r.partition;
        return r;
    }

    auto reduction_support_exists(const Reduction & r, size_t budget) -> bool
    {
        auto d = r.problem.domains;
        d[r.switch_var] = Domain{r.odd_switch};
        vector<Constraint> links;
        for (auto & c : r.problem.constraints)
            if (c.get_if<ParityLink>())
                links.push_back(c);
        auto ac = propagate_fixpoint(links, d);
        if (ac.wipeout)
            return false;
        auto prec = build_precedence(r.problem, r.partition);
        return has_support(prec, ac.final_domains, r.switch_var, r.odd_switch, budget);
    }

    auto family_by_name(const std::string & name, size_t param) -> std::optional<Problem>
    {
        if (name == "pigeonhole")
            return pigeonhole_model(param);
        if (name == "thm4")
            return thm4_example();
        if (name == "thm5")
            return thm5_example().problem;
        if (name == "thm7")
            return thm7_base(param);
        return std::nullopt;
    }
}
