#ifndef VALSYM_INSTANCES_HH
#define VALSYM_INSTANCES_HH

#include <valsym/consistency.hh>
#include <valsym/dimacs.hh>
#include <valsym/problem.hh>
#include <valsym/symmetry.hh>

#include <optional>
#include <string>
#include <vector>

namespace valsym
{
    /// n variables over {1..n+1}; for every value j some variable equals j. All
    /// values form one interchangeable class. Unsatisfiable.
    [[nodiscard]] auto pigeonhole_model(std::size_t n) -> Problem;

    /// Five variables, all values interchangeable: X1=1, X2 in {1,2}, X3 in {1,3},
    /// X4 in {1,4}, X5=5. No constraints.
    [[nodiscard]] auto thm4_example() -> Problem;

    struct Thm5Example
    {
        /// Seven variables over {1..4}, one interchangeable class, no constraints.
        Problem problem;
        /// Z1..Z4 as they stand once the dual-variable encoding is arc consistent.
        DomainSet dual_domains;
    };

    /// X1=1, X2 in {1,2}, X3 in {1,3}, X4 in {3,4}, X5=2, X6=3, X7=4.
    [[nodiscard]] auto thm5_example() -> Thm5Example;

    /// 2k+1 variables over 2(k+1) values: X_i in {i,i+1} for i <= k and
    /// X_{k+i} = k+1+i for i <= k+1, with values i and k+1+i interchangeable.
    /// Returned as the dual-variable encoding with its initial domains.
    [[nodiscard]] auto thm7_family(std::size_t k) -> PugetEncoding;

    /// The base problem of thm7_family, before encoding.
    [[nodiscard]] auto thm7_base(std::size_t k) -> Problem;

    struct Reduction
    {
        Problem problem;
        ValueClassPartition partition;
        /// The last variable, with domain {4N+1, 4N+2}.
        VarId switch_var;
        Value odd_switch;
        Value even_switch;
    };

    /// CSP over N+M+1 variables and 4N+2 values whose interchangeable pairs
    /// {4i-3,4i-2} and {4i-1,4i} encode x_i true and false. Throws InvalidProblem
    /// for a clause that is empty, wider than three literals, or out of range.
    [[nodiscard]] auto reduce_3sat(const CNFFormula & f) -> Reduction;

    /// Fixes the switch to its odd value, runs AC on the parity links, then asks
    /// whether the within-pair precedence constraints have a support there. True
    /// exactly when the reduced formula is satisfiable.
    [[nodiscard]] auto reduction_support_exists(const Reduction & r, std::size_t budget = default_budget) -> bool;

    /// Instance families addressable by name: "pigeonhole" (param n), "thm4",
    /// "thm5", "thm7" (param k, base problem). Returns nullopt for an unknown name.
    [[nodiscard]] auto family_by_name(const std::string & name, std::size_t param) -> std::optional<Problem>;
}

#endif
