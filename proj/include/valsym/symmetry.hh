#ifndef VALSYM_SYMMETRY_HH
#define VALSYM_SYMMETRY_HH

#include <valsym/partition.hh>
#include <valsym/permutation.hh>
#include <valsym/problem.hh>

#include <vector>

namespace valsym
{
    enum class SymmetryTag
    {
        FullGroup,
        AdjacentGenerators,
        Custom
    };

    struct SymmetrySet
    {
        SymmetryTag tag = SymmetryTag::Custom;
        std::vector<Permutation> perms;
    };

    /// One transposition per pair of neighbouring values inside each class: m - k of
    /// them for m classified values in k classes.
    [[nodiscard]] auto adjacent_generators(const ValueClassPartition & p, Value m) -> SymmetrySet;

    /// Every class-respecting permutation, identity included. Only for oracles: the
    /// size is the product of the class-size factorials, refused beyond `budget`.
    [[nodiscard]] auto full_group(const ValueClassPartition & p, Value m, std::size_t budget = 1'000'000) -> SymmetrySet;

    /// a <=lex perm(a) for every perm in s, comparing all slots of `a` in order.
    [[nodiscard]] auto valsymbreak_holds(const Assignment & a, const SymmetrySet & s) -> bool;

    /// ValSymBreak for the full group of `p`, decided by first-occurrence order:
    /// inside each class, values are first used in class order and a value is used
    /// only if all earlier class values are.
    [[nodiscard]] auto valsymbreak_holds(const Assignment & a, const ValueClassPartition & p) -> bool;

    /// One LexLeqPermuted per permutation, over `vars` in order.
    [[nodiscard]] auto lex_constraints(const SymmetrySet & s, const std::vector<VarId> & vars) -> std::vector<Constraint>;

    /// Lex constraints for the adjacent generators over all variables of `prob`.
    [[nodiscard]] auto build_generator_lex(const Problem & prob, const ValueClassPartition & p) -> std::vector<Constraint>;

    /// One Precedence per class of two or more values, over all variables of `prob`.
    [[nodiscard]] auto build_precedence(const Problem & prob, const ValueClassPartition & p) -> std::vector<Constraint>;

    struct PugetOptions
    {
        /// Append X_{n+j} = j for every value instead of giving each Z_j a dummy value.
        bool surjection = false;
    };

    /// Dual-variable decomposition. Z_j records the first (1-based) position using
    /// value j; n+j is its "unused" value so unused class values sort after used
    /// ones and among themselves by value.
    struct PugetEncoding
    {
        Problem problem;
        /// Variables of the input problem: indices 0..original_count-1.
        std::size_t original_count = 0;
        /// Variables channelled into Z: the originals plus any surjection variables.
        std::size_t channelled_count = 0;
        /// Index of Z_j, for j in 1..value_count.
        std::vector<VarId> dual;
        /// Indices into problem.constraints of the constraints the encoding added.
        std::vector<std::size_t> generated;

        [[nodiscard]] auto dual_of(Value j) const -> VarId { return dual.at(static_cast<std::size_t>(j - 1)); }

        /// The constraints the encoding added, without the input problem's own.
        [[nodiscard]] auto generated_constraints() const -> std::vector<Constraint>;

        /// Restrict an assignment of the encoding to the original variables.
        [[nodiscard]] auto project(const Assignment & a) const -> Assignment;
    };

    [[nodiscard]] auto build_puget(const Problem & prob, const ValueClassPartition & p, const PugetOptions & options = {})
        -> PugetEncoding;

    /// Inside each class, relabel values in order of first occurrence; unused class
    /// values take the remaining slots in ascending order. Unclassed values and
    /// unassigned slots are left alone.
    [[nodiscard]] auto canonical_form(const Assignment & a, const ValueClassPartition & p) -> Assignment;

    /// `prob` with `extra` appended to its constraints.
    [[nodiscard]] auto with_constraints(Problem prob, const std::vector<Constraint> & extra) -> Problem;
}

#endif
