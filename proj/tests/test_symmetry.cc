#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <valsym/consistency.hh>
#include <valsym/exception.hh>
#include <valsym/instances.hh>
#include <valsym/propagation.hh>
#include <valsym/symmetry.hh>

#include <set>

using namespace valsym;
using namespace valsym::testing;
using std::vector;

namespace
{
    auto factorial(std::size_t k) -> std::size_t
    {
        std::size_t f = 1;
        for (std::size_t i = 2; i <= k; ++i)
            f *= i;
        return f;
    }

    auto x_prunings(const PropagationOutcome & o, const DomainSet & initial, std::size_t n) -> PairSet
    {
        PairSet s;
        for (VarId v = 0; v < n; ++v)
            initial[v].for_each([&](Value x) {
                if (o.wipeout || ! o.final_domains[v].contains(x))
                    s.emplace(v, x);
            });
        return s;
    }
}

TEST_CASE("permutations")
{
    auto p = Permutation::from_images({2, 3, 1});
    CHECK(p(1) == 2);
    CHECK(p(4) == 4);
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK(p.compose(p) == p.inverse());
    CHECK(p.to_string() == "(1 2 3)");
    CHECK(Permutation::identity(3).to_string() == "()");
    CHECK(p.apply({1, unassigned, 3}) == Assignment{2, unassigned, 1});
    CHECK(Permutation::transposition(2, 4, 4).to_string() == "(2 4)");
}

TEST_CASE("partitions")
{
    ValueClassPartition p{{{1, 2}, {4, 5, 6}}};
    CHECK(p.class_count() == 2);
    CHECK(p.class_of(5) == 1);
    CHECK(! p.class_of(3));
    CHECK(p.position_in_class(6) == 2);
    CHECK(p.max_value() == 6);
    CHECK_THROWS_AS((ValueClassPartition{{{1, 2}, {2, 3}}}), InvalidProblem);
    CHECK_THROWS_AS((ValueClassPartition{{{2, 1}}}), InvalidProblem);
    CHECK_THROWS_AS(p.check_within(5), InvalidProblem);
}

TEST_CASE("generator sets and full groups")
{
    Rng rng(21);
    for (int t = 0; t < 40; ++t) {
        auto m = uniform(rng, 1, 6);
        auto p = random_partition(rng, m);
        auto gens = adjacent_generators(p, m);
        CHECK(gens.tag == SymmetryTag::AdjacentGenerators);
        CHECK(gens.perms.size() == static_cast<std::size_t>(m) - p.class_count());
        for (auto & g : gens.perms) {
            auto cycle = g.to_string();
            int moved = 0;
            for (Value v = 1; v <= m; ++v)
                if (g(v) != v) {
                    ++moved;
                    CHECK(p.class_of(v) == p.class_of(g(v)));
                    CHECK(std::abs(g(v) - v) == 1);
                }
            CHECK(moved == 2);
        }

        auto group = full_group(p, m);
        std::size_t expected = 1;
        for (auto & cls : p.classes())
            expected *= factorial(cls.size());
        CHECK(group.perms.size() == expected);
        std::set<Permutation> got(group.perms.begin(), group.perms.end());
        auto filtered = class_group_by_filter(p, m);
        CHECK(got == std::set<Permutation>(filtered.begin(), filtered.end()));
    }
    CHECK_THROWS_AS((void)full_group(ValueClassPartition::all_interchangeable(9), 9, 1000), BudgetExceeded);
}

TEST_CASE("generator lex, full group lex and precedence accept the same assignments")
{
    Rng rng(22);
    for (int t = 0; t < 60; ++t) {
        auto m = uniform(rng, 1, 5);
        auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
        auto p = random_partition(rng, m);
        auto gens = adjacent_generators(p, m);
        auto group = full_group(p, m);
        auto filtered = class_group_by_filter(p, m);
        vector<VarId> vars(n);
        for (VarId v = 0; v < n; ++v)
            vars[v] = v;
        for_each_assignment(DomainSet(n, Domain::range(1, m)), vars, [&](const Assignment & a) {
            bool brute = orbit_min(a, filtered) == a;
            CHECK(valsymbreak_holds(a, group) == brute);
            CHECK(valsymbreak_holds(a, gens) == brute);
            CHECK(valsymbreak_holds(a, p) == brute);
            CHECK(canonical_form(a, p) == orbit_min(a, filtered));
        });
    }
}

TEST_CASE("swapping 1 with each other value does not break all symmetry")
{
    auto m = 3;
    SymmetrySet star{SymmetryTag::Custom, {Permutation::transposition(1, 2, m), Permutation::transposition(1, 3, m)}};
    CHECK(valsymbreak_holds({1, 2}, star));
    CHECK(valsymbreak_holds({1, 3}, star));
    auto p = ValueClassPartition::all_interchangeable(m);
    CHECK(valsymbreak_holds({1, 2}, p));
    CHECK(! valsymbreak_holds({1, 3}, p));
}

TEST_CASE("canonical form")
{
    ValueClassPartition p{{{1, 2, 3}, {5, 6}}};
    CHECK(canonical_form({3, 4, 6, 3, 2}, p) == Assignment{1, 4, 5, 1, 2});
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        Assignment a;
        for (int i = 0; i < 5; ++i)
            a.push_back(uniform(rng, 1, 6));
        auto c = canonical_form(a, p);
        CHECK(canonical_form(c, p) == c);
        CHECK(valsymbreak_holds(c, p));
    }
}

TEST_CASE("builders")
{
    auto prob = make_problem(4, 6);
    ValueClassPartition p{{{1, 2, 3}, {4}, {5, 6}}};
    CHECK(build_precedence(prob, p).size() == 2);
    CHECK(build_generator_lex(prob, p).size() == 3);
    CHECK(lex_constraints(full_group(p, 6), {0, 1, 2, 3}).size() == 12);

    auto enc = build_puget(prob, p);
    CHECK(enc.original_count == 4);
    CHECK(enc.channelled_count == 4);
    CHECK(enc.problem.variable_count() == 10);
    CHECK(enc.generated.size() == 2 * 4 * 6 + 3);
    CHECK(enc.problem.domains[enc.dual_of(2)] == Domain{1, 2, 3, 4, 6});
    CHECK(enc.project({1, 2, 3, 4, 1, 2, 3, 4, 11, 12}) == Assignment{1, 2, 3, 4});

    auto sur = build_puget(prob, p, {.surjection = true});
    CHECK(sur.channelled_count == 10);
    CHECK(sur.problem.variable_count() == 16);
    CHECK(sur.problem.domains[sur.dual_of(2)] == Domain::range(1, 10));
}

TEST_CASE("dual encoding solutions project onto symmetry-broken solutions")
{
    Rng rng(24);
    for (int t = 0; t < 60; ++t) {
        auto m = uniform(rng, 1, 4);
        auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
        auto p = random_partition(rng, m);
        auto prob = make_problem(n, m);
        prob.domains = random_domains(rng, n, m, 0.7);
        auto enc = build_puget(prob, p);

        std::set<Assignment> projected;
        for (auto & s : enumerate_solutions(enc.problem, enc.problem.domains))
            CHECK(projected.insert(enc.project(s)).second);
        std::set<Assignment> expected;
        for (auto & s : enumerate_solutions(prob, prob.domains))
            if (valsymbreak_holds(s, p))
                expected.insert(s);
        CHECK(projected == expected);
    }
}

TEST_CASE("dual encoding on the example domains")
{
    SUBCASE("five-variable fixture: AC prunes 1 from X2, X3, X4")
    {
        auto prob = thm4_example();
        auto enc = build_puget(prob, *prob.partition);
        auto out = propagate_fixpoint(enc.problem, enc.problem.domains);
        CHECK(! out.wipeout);
        CHECK(x_prunings(out, prob.domains, 5) == PairSet{{1, 1}, {2, 1}, {3, 1}});
    }
    SUBCASE("seven-variable fixture: AC reaches the listed Z domains and keeps every X value")
    {
        auto ex = thm5_example();
        auto enc = build_puget(ex.problem, *ex.problem.partition);
        auto out = propagate_fixpoint(enc.problem, enc.problem.domains);
        CHECK(! out.wipeout);
        CHECK(x_prunings(out, ex.problem.domains, 7).empty());
        for (Value j = 1; j <= 4; ++j)
            CHECK(out.final_domains[enc.dual_of(j)] == ex.dual_domains[static_cast<std::size_t>(j - 1)]);

        auto d = enc.problem.domains;
        for (Value j = 1; j <= 4; ++j)
            d[enc.dual_of(j)] = ex.dual_domains[static_cast<std::size_t>(j - 1)];
        CHECK(propagate_fixpoint(enc.problem, d).prunings.empty());

        auto oracle = brute_force_gac({0, 1, 2, 3, 4, 5, 6},
            [&](const Assignment & a) { return valsymbreak_holds(a, *ex.problem.partition); }, ex.problem.domains);
        CHECK(pruned_set(oracle) == PairSet{{1, 1}});
    }
}
