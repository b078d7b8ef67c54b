#ifndef VALSYM_PERMUTATION_HH
#define VALSYM_PERMUTATION_HH

#include <valsym/types.hh>

#include <string>
#include <vector>

namespace valsym
{
    /// A bijection on the values 1..m. Values outside that range map to themselves.
    class Permutation
    {
    public:
        Permutation() = default;

        [[nodiscard]] static auto identity(Value m) -> Permutation;
        [[nodiscard]] static auto transposition(Value a, Value b, Value m) -> Permutation;

        /// images[k] is the image of value k+1. Throws InvalidProblem unless bijective on 1..m.
        [[nodiscard]] static auto from_images(const std::vector<Value> & images) -> Permutation;

        [[nodiscard]] auto size() const -> Value { return static_cast<Value>(_image.size()) - 1; }

        [[nodiscard]] auto operator()(Value v) const -> Value
        {
            return (v >= 1 && v < static_cast<Value>(_image.size())) ? _image[static_cast<std::size_t>(v)] : v;
        }

        /// (this ∘ other)(v) = this(other(v)).
        [[nodiscard]] auto compose(const Permutation & other) const -> Permutation;
        [[nodiscard]] auto inverse() const -> Permutation;
        [[nodiscard]] auto is_identity() const -> bool;

        /// Image list for values 1..m, the inverse of from_images.
        [[nodiscard]] auto images() const -> std::vector<Value>;

        [[nodiscard]] auto apply(const Assignment & a) const -> Assignment;

        [[nodiscard]] auto operator==(const Permutation & other) const -> bool;
        [[nodiscard]] auto operator<(const Permutation & other) const -> bool { return images() < other.images(); }

        /// Cycle notation, e.g. "(1 2)(4 5)", "()" for the identity.
        [[nodiscard]] auto to_string() const -> std::string;

    private:
        std::vector<Value> _image{0};
    };
}

#endif
