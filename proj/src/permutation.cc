#include <valsym/exception.hh>
#include <valsym/permutation.hh>

#include <algorithm>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace valsym
{
    auto Permutation::identity(Value m) -> Permutation
    {
        Permutation p;
        p._image.resize(static_cast<size_t>(m) + 1);
        for (Value v = 0; v <= m; ++v)
            p._image[static_cast<size_t>(v)] = v;
        return p;
    }

    auto Permutation::transposition(Value a, Value b, Value m) -> Permutation
    {
        if (a < 1 || b < 1 || a > m || b > m)
            throw InvalidProblem("transposition values out of range 1.." + std::to_string(m));
        auto p = identity(m);
        std::swap(p._image[static_cast<size_t>(a)], p._image[static_cast<size_t>(b)]);
        return p;
    }

    auto Permutation::from_images(const vector<Value> & images) -> Permutation
    {
        auto m = static_cast<Value>(images.size());
        vector<bool> seen(images.size() + 1, false);
        for (auto v : images) {
            if (v < 1 || v > m || seen[static_cast<size_t>(v)])
                throw InvalidProblem("permutation is not a bijection on 1.." + std::to_string(m));
            seen[static_cast<size_t>(v)] = true;
        }
        Permutation p;
        p._image.assign(images.size() + 1, 0);
        std::copy(images.begin(), images.end(), p._image.begin() + 1);
        return p;
    }

    auto Permutation::compose(const Permutation & other) const -> Permutation
    {
        auto m = std::max(size(), other.size());
        Permutation p = identity(m);
        for (Value v = 1; v <= m; ++v)
            p._image[static_cast<size_t>(v)] = (*this)(other(v));
        return p;
    }

    auto Permutation::inverse() const -> Permutation
    {
        Permutation p = identity(size());
        for (Value v = 1; v <= size(); ++v)
            p._image[static_cast<size_t>((*this)(v))] = v;
        return p;
    }

    auto Permutation::is_identity() const -> bool
    {
        for (Value v = 1; v <= size(); ++v)
            if ((*this)(v) != v)
                return false;
        return true;
    }

    auto Permutation::images() const -> vector<Value>
    {
        return {_image.begin() + 1, _image.end()};
    }

    auto Permutation::apply(const Assignment & a) const -> Assignment
    {
        Assignment result(a.size());
        std::transform(a.begin(), a.end(), result.begin(), [&](Value v) { return v == unassigned ? v : (*this)(v); });
        return result;
    }

    auto Permutation::operator==(const Permutation & other) const -> bool
    {
        auto m = std::max(size(), other.size());
        for (Value v = 1; v <= m; ++v)
            if ((*this)(v) != other(v))
                return false;
        return true;
    }

    auto Permutation::to_string() const -> string
    {
        std::ostringstream s;
        vector<bool> done(_image.size(), false);
        bool any = false;
        for (Value v = 1; v <= size(); ++v) {
            if (done[static_cast<size_t>(v)] || (*this)(v) == v)
                continue;
            any = true;
            s << '(';
            Value w = v;
            bool first = true;
            while (! done[static_cast<size_t>(w)]) {
                done[static_cast<size_t>(w)] = true;
                if (! first)
                    s << ' ';
                s << w;
                first = false;
                w = (*this)(w);
            }
            s << ')';
        }
        return any ? s.str() : "()";
    }
}
