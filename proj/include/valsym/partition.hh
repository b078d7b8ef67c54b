#ifndef VALSYM_PARTITION_HH
#define VALSYM_PARTITION_HH

#include <valsym/types.hh>

#include <optional>
#include <string>
#include <vector>

namespace valsym
{
    /// Ordered, pairwise disjoint classes of interchangeable values. Within a class
    /// values are strictly ascending. Values in no class are not interchangeable
    /// with anything.
    class ValueClassPartition
    {
    public:
        ValueClassPartition() = default;

        /// Throws InvalidProblem if classes overlap, are not strictly ascending, or
        /// contain a value < 1.
        explicit ValueClassPartition(std::vector<std::vector<Value>> classes);

        /// Single class {1..m}.
        [[nodiscard]] static auto all_interchangeable(Value m) -> ValueClassPartition;

        [[nodiscard]] auto classes() const -> const std::vector<std::vector<Value>> & { return _classes; }
        [[nodiscard]] auto class_count() const -> std::size_t { return _classes.size(); }

        /// Index of the class containing v, if any.
        [[nodiscard]] auto class_of(Value v) const -> std::optional<std::size_t>;

        /// Position of v inside its class.
        [[nodiscard]] auto position_in_class(Value v) const -> std::optional<std::size_t>;

        [[nodiscard]] auto max_value() const -> Value;

        /// Total number of classified values.
        [[nodiscard]] auto classified_count() const -> std::size_t;

        /// Throws InvalidProblem if any value exceeds m.
        auto check_within(Value m) const -> void;

        [[nodiscard]] auto operator==(const ValueClassPartition &) const -> bool = default;

        [[nodiscard]] auto to_string() const -> std::string;

    private:
        std::vector<std::vector<Value>> _classes;
        std::vector<int> _class_of;
        std::vector<int> _position;
    };
}

#endif
