#include <valsym/domain.hh>

#include <algorithm>
#include <limits>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace valsym
{
    Domain::Domain(Value capacity) :
        _capacity(capacity),
        _words(capacity >= 0 ? static_cast<size_t>(capacity) / 64 + 1 : 0, 0)
    {
    }

    Domain::Domain(std::initializer_list<Value> values)
    {
        for (auto v : values)
            insert(v);
    }

    auto Domain::range(Value lo, Value hi) -> Domain
    {
        Domain d(std::max(hi, 0));
        for (Value v = lo; v <= hi; ++v)
            d.insert(v);
        return d;
    }

    auto Domain::of(const vector<Value> & values) -> Domain
    {
        Domain d;
        for (auto v : values)
            d.insert(v);
        return d;
    }

    auto Domain::insert(Value v) -> void
    {
        if (v < 0)
            return;
        if (v > _capacity) {
            _capacity = v;
            _words.resize(static_cast<size_t>(v) / 64 + 1, 0);
        }
        auto u = static_cast<size_t>(v);
        _words[u / 64] |= std::uint64_t{1} << (u % 64);
    }

    auto Domain::erase(Value v) -> bool
    {
        if (! contains(v))
            return false;
        auto u = static_cast<size_t>(v);
        _words[u / 64] &= ~(std::uint64_t{1} << (u % 64));
        return true;
    }

    auto Domain::clear() -> void
    {
        std::fill(_words.begin(), _words.end(), 0);
    }

    auto Domain::assign(Value v) -> void
    {
        bool had = contains(v);
        clear();
        if (had)
            insert(v);
    }

    auto Domain::size() const -> size_t
    {
        size_t result = 0;
        for (auto w : _words)
            result += static_cast<size_t>(std::popcount(w));
        return result;
    }

    auto Domain::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](auto w) { return w == 0; });
    }

    auto Domain::min() const -> Value
    {
        for (size_t w = 0; w < _words.size(); ++w)
            if (_words[w])
                return static_cast<Value>(w * 64 + static_cast<size_t>(std::countr_zero(_words[w])));
        return -1;
    }

    auto Domain::max() const -> Value
    {
        for (size_t w = _words.size(); w-- > 0;)
            if (_words[w])
                return static_cast<Value>(w * 64 + 63 - static_cast<size_t>(std::countl_zero(_words[w])));
        return -1;
    }

    auto Domain::values() const -> vector<Value>
    {
        vector<Value> result;
        for_each([&](Value v) { result.push_back(v); });
        return result;
    }

    auto Domain::is_subset_of(const Domain & other) const -> bool
    {
        bool ok = true;
        for_each([&](Value v) { ok = ok && other.contains(v); });
        return ok;
    }

    auto Domain::operator==(const Domain & other) const -> bool
    {
        auto n = std::max(_words.size(), other._words.size());
        for (size_t w = 0; w < n; ++w) {
            auto a = w < _words.size() ? _words[w] : 0;
            auto b = w < other._words.size() ? other._words[w] : 0;
            if (a != b)
                return false;
        }
        return true;
    }

    auto Domain::to_string() const -> string
    {
        std::ostringstream s;
        s << '{';
        bool first = true;
        for_each([&](Value v) {
            if (! first)
                s << ',';
            s << v;
            first = false;
        });
        s << '}';
        return s.str();
    }

    auto any_empty(const DomainSet & d) -> bool
    {
        return std::any_of(d.begin(), d.end(), [](const Domain & x) { return x.empty(); });
    }

    auto all_singleton(const DomainSet & d) -> bool
    {
        return std::all_of(d.begin(), d.end(), [](const Domain & x) { return x.is_singleton(); });
    }

    auto search_space_size(const DomainSet & d) -> size_t
    {
        size_t result = 1;
        for (auto & x : d) {
            auto s = x.size();
            if (s == 0)
                return 0;
            if (result > std::numeric_limits<size_t>::max() / s)
                result = std::numeric_limits<size_t>::max();
            else
                result *= s;
        }
        return result;
    }
}
