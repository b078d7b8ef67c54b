#ifndef VALSYM_TYPES_HH
#define VALSYM_TYPES_HH

#include <cstddef>
#include <vector>

namespace valsym
{
    using Value = int;
    using VarId = std::size_t;

    /// Slot value meaning "not assigned" in a partial assignment. Real values are >= 1.
    inline constexpr Value unassigned = 0;

    /// Indexed by VarId. Total when no slot holds `unassigned`.
    using Assignment = std::vector<Value>;

    [[nodiscard]] inline auto is_total(const Assignment & a) -> bool
    {
        for (auto v : a)
            if (v == unassigned)
                return false;
        return true;
    }

    enum class Parity
    {
        Odd,
        Even
    };

    [[nodiscard]] inline auto has_parity(Value v, Parity p) -> bool
    {
        return (v % 2 != 0) == (p == Parity::Odd);
    }
}

#endif
