#include <valsym/exception.hh>
#include <valsym/problem.hh>

#include <algorithm>

namespace valsym
{
    auto Problem::validate() const -> void
    {
        for (auto & c : constraints)
            for (auto v : c.scope())
                if (v >= variable_count())
                    throw InvalidProblem("constraint " + c.to_string() + " mentions a variable beyond " + std::to_string(variable_count()));
        if (partition)
            partition->check_within(value_count);
    }

    auto make_problem(std::size_t n, Value m) -> Problem
    {
        Problem p;
        p.value_count = m;
        p.domains.assign(n, Domain::range(1, m));
        return p;
    }

    auto is_solution(const Problem & problem, const Assignment & a) -> bool
    {
        if (a.size() != problem.variable_count() || ! is_total(a))
            throw ContractViolation("is_solution needs a total assignment");
        return std::all_of(problem.constraints.begin(), problem.constraints.end(), [&](const Constraint & c) { return c.check(a); });
    }

    auto is_consistent_partial(const std::vector<Constraint> & constraints, const Assignment & a) -> bool
    {
        return std::all_of(constraints.begin(), constraints.end(), [&](const Constraint & c) {
            return ! c.fully_assigned(a) || c.check(a);
        });
    }
}
