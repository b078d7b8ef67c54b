#ifndef VALSYM_CONSTRAINT_HH
#define VALSYM_CONSTRAINT_HH

#include <valsym/permutation.hh>
#include <valsym/types.hh>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace valsym
{
    class Constraint;

    /// [X1..Xn] <=lex [perm(X1)..perm(Xn)].
    struct LexLeqPermuted
    {
        Permutation perm;
        std::vector<VarId> vars;
    };

    /// Within `values`, the first use of each value comes before the first use of
    /// every later value. A later value may be used only if all earlier ones are.
    struct Precedence
    {
        std::vector<Value> values;
        std::vector<VarId> vars;
    };

    /// x = j -> z <= i
    struct ImpEqLeq
    {
        VarId x;
        Value j;
        VarId z;
        Value i;
    };

    /// z = i -> x = j
    struct ImpEqEq
    {
        VarId z;
        Value i;
        VarId x;
        Value j;
    };

    /// lhs < rhs
    struct StrictLess
    {
        VarId lhs;
        VarId rhs;
    };

    /// Some variable in scope takes `value`.
    struct DisjunctionEq
    {
        Value value;
        std::vector<VarId> vars;
    };

    /// parity(cond) = cond_parity -> parity(target) = target_parity
    struct ParityLink
    {
        VarId cond;
        Parity cond_parity;
        VarId target;
        Parity target_parity;
    };

    /// Variables 0..prefix-1 take exactly `distinct` distinct values.
    struct AtLeastNValues
    {
        std::size_t prefix;
        std::size_t distinct;
    };

    /// parity(cond) = parity -> inner
    struct Conditional
    {
        VarId cond;
        Parity parity;
        std::shared_ptr<const Constraint> inner;
    };

    using ConstraintVariant = std::variant<LexLeqPermuted, Precedence, ImpEqLeq, ImpEqEq, StrictLess, DisjunctionEq,
        ParityLink, AtLeastNValues, Conditional>;

    /// An immutable constraint. Semantics are defined by check(); each kind except
    /// AtLeastNValues also has a propagator (see propagators.hh).
    class Constraint
    {
    public:
        template <typename T>
            requires std::is_constructible_v<ConstraintVariant, T>
        Constraint(T kind) :
            _kind(std::move(kind))
        {
            validate();
        }

        [[nodiscard]] auto kind() const -> const ConstraintVariant & { return _kind; }

        template <typename T>
        [[nodiscard]] auto get_if() const -> const T *
        {
            return std::get_if<T>(&_kind);
        }

        /// Variables the constraint mentions, without duplicates, in first-mention order.
        [[nodiscard]] auto scope() const -> const std::vector<VarId> & { return _scope; }

        [[nodiscard]] auto arity() const -> std::size_t { return _scope.size(); }

        /// Stable identifier, also used as the "type" field of the problem file format.
        [[nodiscard]] auto name() const -> std::string;

        /// Exact satisfaction on an assignment that is total on scope().
        /// Throws ContractViolation if some scope variable is unassigned.
        [[nodiscard]] auto check(const Assignment & a) const -> bool;

        [[nodiscard]] auto fully_assigned(const Assignment & a) const -> bool;

        [[nodiscard]] auto to_string() const -> std::string;

    private:
        auto validate() -> void;

        ConstraintVariant _kind;
        std::vector<VarId> _scope;
    };

    [[nodiscard]] auto make_conditional(VarId cond, Parity parity, Constraint inner) -> Constraint;
}

#endif
