#ifndef VALSYM_DOMAIN_HH
#define VALSYM_DOMAIN_HH

#include <valsym/types.hh>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace valsym
{
    /// Finite set of small non-negative integer values backed by a bitset.
    /// Values outside [0, capacity] are never members.
    class Domain
    {
    public:
        Domain() = default;

        /// Empty domain able to hold values 0..capacity.
        explicit Domain(Value capacity);

        Domain(std::initializer_list<Value> values);

        [[nodiscard]] static auto range(Value lo, Value hi) -> Domain;
        [[nodiscard]] static auto of(const std::vector<Value> & values) -> Domain;

        [[nodiscard]] auto capacity() const -> Value { return _capacity; }

        [[nodiscard]] auto contains(Value v) const -> bool
        {
            if (v < 0 || v > _capacity)
                return false;
            auto u = static_cast<std::size_t>(v);
            return (_words[u / 64] >> (u % 64)) & 1u;
        }

        /// Grows capacity as needed. Only for building domains, never used by propagation.
        auto insert(Value v) -> void;

        /// Returns true if the value was present.
        auto erase(Value v) -> bool;

        auto clear() -> void;
        auto assign(Value v) -> void;

        [[nodiscard]] auto size() const -> std::size_t;
        [[nodiscard]] auto empty() const -> bool;
        [[nodiscard]] auto is_singleton() const -> bool { return size() == 1; }
        [[nodiscard]] auto min() const -> Value;
        [[nodiscard]] auto max() const -> Value;

        [[nodiscard]] auto values() const -> std::vector<Value>;

        [[nodiscard]] auto is_subset_of(const Domain & other) const -> bool;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t w = 0; w < _words.size(); ++w) {
                auto bits = _words[w];
                while (bits) {
                    auto b = std::countr_zero(bits);
                    f(static_cast<Value>(w * 64 + static_cast<std::size_t>(b)));
                    bits &= bits - 1;
                }
            }
        }

        /// Set equality; capacity is not compared.
        [[nodiscard]] auto operator==(const Domain & other) const -> bool;

        [[nodiscard]] auto to_string() const -> std::string;

    private:
        Value _capacity = -1;
        std::vector<std::uint64_t> _words;
    };

    /// One domain per variable, indexed by VarId.
    using DomainSet = std::vector<Domain>;

    [[nodiscard]] auto any_empty(const DomainSet & d) -> bool;
    [[nodiscard]] auto all_singleton(const DomainSet & d) -> bool;

    /// Product of domain sizes, saturating at SIZE_MAX.
    [[nodiscard]] auto search_space_size(const DomainSet & d) -> std::size_t;
}

#endif
