#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <valsym/consistency.hh>
#include <valsym/dimacs.hh>
#include <valsym/exception.hh>
#include <valsym/instances.hh>
#include <valsym/propagation.hh>

using namespace valsym;
using namespace valsym::testing;
using std::vector;

namespace
{
    auto random_cnf(Rng & rng, int n, int m) -> CNFFormula
    {
        CNFFormula f;
        f.variable_count = n;
        for (int c = 0; c < m; ++c) {
            vector<Literal> clause;
            auto width = uniform(rng, 1, 3);
            for (int l = 0; l < width; ++l)
                clause.push_back(uniform(rng, 1, n) * (uniform(rng, 0, 1) ? 1 : -1));
            f.clauses.push_back(clause);
        }
        return f;
    }

    // Truth tables, independent of the library's SAT check.
    auto satisfiable(const CNFFormula & f) -> bool
    {
        for (unsigned bits = 0; bits < (1u << f.variable_count); ++bits) {
            bool all = true;
            for (auto & clause : f.clauses) {
                bool any = false;
                for (auto lit : clause) {
                    bool value = bits & (1u << (std::abs(lit) - 1));
                    any = any || (lit > 0 ? value : ! value);
                }
                all = all && any;
            }
            if (all)
                return true;
        }
        return false;
    }
}

TEST_CASE("pigeonhole model")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        auto prob = pigeonhole_model(n);
        CHECK(prob.variable_count() == n);
        CHECK(prob.value_count == static_cast<Value>(n) + 1);
        REQUIRE(prob.partition);
        CHECK(prob.partition->class_count() == 1);
        CHECK(enumerate_solutions(prob, prob.domains).empty());
    }
    CHECK_THROWS_AS((void)pigeonhole_model(0), InvalidProblem);
}

TEST_CASE("fixtures")
{
    auto t4 = thm4_example();
    CHECK(t4.variable_count() == 5);
    CHECK(t4.domains[3] == Domain{1, 4});
    auto t5 = thm5_example();
    CHECK(t5.problem.variable_count() == 7);
    CHECK(t5.dual_domains.size() == 4);
    CHECK(t5.dual_domains[2] == Domain{3, 4, 6});
    CHECK(family_by_name("thm4", 0)->domains == t4.domains);
    CHECK(family_by_name("pigeonhole", 3)->variable_count() == 3);
    CHECK(! family_by_name("nope", 1));
}

TEST_CASE("thm7 family")
{
    for (std::size_t k = 1; k <= 3; ++k) {
        auto base = thm7_base(k);
        CHECK(base.variable_count() == 2 * k + 1);
        CHECK(base.value_count == static_cast<Value>(2 * (k + 1)));
        REQUIRE(base.partition);
        CHECK(base.partition->class_count() == k + 1);
        CHECK(base.partition->classes()[0] == vector<Value>{1, static_cast<Value>(k) + 2});

        // The bare base problem has solutions; the symmetry broken encoding has none.
        CHECK(! enumerate_solutions(base, base.domains).empty());
        auto enc = thm7_family(k);
        CHECK(enc.original_count == 2 * k + 1);
        if (k <= 2)
            CHECK(enumerate_solutions(enc.problem, enc.problem.domains).empty());
        CHECK(propagate_fixpoint(enc.problem, enc.problem.domains).wipeout);
        CHECK(! is_k_consistent(enc.problem, k + 1).holds);
    }
}

TEST_CASE("3-SAT reduction")
{
    SUBCASE("shape")
    {
        CNFFormula f{2, {{1, -2}, {2}}};
        auto r = reduce_3sat(f);
        CHECK(r.problem.variable_count() == 2 + 2 + 1);
        CHECK(r.problem.value_count == 10);
        CHECK(r.partition.class_count() == 4);
        CHECK(r.problem.domains[0] == Domain{1, 2, 3, 4});
        CHECK(r.problem.domains[2] == Domain{1, 2, 7, 8});
        CHECK(r.problem.domains[3] == Domain{5, 6});
        CHECK(r.problem.domains[r.switch_var] == Domain{9, 10});
    }
    SUBCASE("odd switch prunes truth variables to odd values")
    {
        CNFFormula f{2, {{1, 2}}};
        auto r = reduce_3sat(f);
        auto d = r.problem.domains;
        d[r.switch_var] = Domain{r.odd_switch};
        auto out = propagate_fixpoint(r.problem, d);
        CHECK(out.final_domains[0] == Domain{1, 3});
        CHECK(out.final_domains[1] == Domain{5, 7});
        CHECK(out.final_domains[2] == Domain{2, 6});
    }
    SUBCASE("malformed clauses")
    {
        CHECK_THROWS_AS((void)reduce_3sat(CNFFormula{2, {{}}}), InvalidProblem);
        CHECK_THROWS_AS((void)reduce_3sat(CNFFormula{2, {{1, 2, -1, 2}}}), InvalidProblem);
        CHECK_THROWS_AS((void)reduce_3sat(CNFFormula{2, {{3}}}), InvalidProblem);
        CHECK_THROWS_AS((void)reduce_3sat(CNFFormula{0, {}}), InvalidProblem);
    }
    SUBCASE("even switch is always satisfiable, odd switch never")
    {
        Rng rng(51);
        for (int t = 0; t < 30; ++t) {
            auto f = random_cnf(rng, uniform(rng, 1, 2), uniform(rng, 1, 2));
            auto r = reduce_3sat(f);
            auto d = r.problem.domains;
            d[r.switch_var] = Domain{r.even_switch};
            CHECK(! enumerate_solutions(r.problem, d).empty());
            d[r.switch_var] = Domain{r.odd_switch};
            CHECK(enumerate_solutions(r.problem, d).empty());
        }
    }
    SUBCASE("swapping within a pair maps solutions to solutions")
    {
        Rng rng(52);
        for (int t = 0; t < 20; ++t) {
            auto f = random_cnf(rng, 2, uniform(rng, 1, 2));
            auto r = reduce_3sat(f);
            auto sols = enumerate_solutions(r.problem, r.problem.domains);
            std::set<Assignment> all(sols.begin(), sols.end());
            for (auto & cls : r.partition.classes()) {
                auto swap = Permutation::transposition(cls[0], cls[1], r.problem.value_count);
                for (auto & s : sols)
                    CHECK(all.count(swap.apply(s)) == 1);
            }
        }
    }
    SUBCASE("support for within-pair precedence exists exactly for satisfiable formulas")
    {
        Rng rng(53);
        for (int t = 0; t < 300; ++t) {
            auto f = random_cnf(rng, uniform(rng, 1, 3), uniform(rng, 1, 4));
            CHECK(reduction_support_exists(reduce_3sat(f)) == satisfiable(f));
        }
    }
}

TEST_CASE("DIMACS")
{
    SUBCASE("round trip")
    {
        auto f = parse_dimacs("c comment\np cnf 3 2\n1 -3 0\n2 3\n -1 0\n");
        CHECK(f.variable_count == 3);
        CHECK(f.clauses == vector<vector<Literal>>{{1, -3}, {2, 3, -1}});
        CHECK(parse_dimacs(to_dimacs(f)) == f);
    }
    SUBCASE("errors carry line numbers")
    {
        auto line_of = [](const char * text) -> std::size_t {
            try {
                (void)parse_dimacs(text);
            }
            catch (const ParseError & e) {
                return e.line();
            }
            return 0;
        };
        CHECK(line_of("1 2 0\n") == 1);
        CHECK(line_of("p cnf 2 1\n0\n") == 2);
        CHECK(line_of("p cnf 2 1\n1 x 0\n") == 2);
        CHECK(line_of("p cnf 2 1\n1 3 0\n") == 2);
        CHECK(line_of("p cnf 2 2\n1 2 0\n") != 0);
        CHECK(line_of("p cnf 2 1\n1 2\n") != 0);
        CHECK(line_of("p cnf 2 1\np cnf 2 1\n") == 2);
        CHECK(line_of("") != 0);
    }
    SUBCASE("brute-force satisfiability")
    {
        Rng rng(54);
        for (int t = 0; t < 300; ++t) {
            auto f = random_cnf(rng, uniform(rng, 1, 5), uniform(rng, 1, 12));
            CHECK(brute_force_satisfiable(f) == satisfiable(f));
        }
        CHECK(! brute_force_satisfiable(CNFFormula{1, {{1}, {-1}}}));
    }
}
