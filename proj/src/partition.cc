#include <valsym/exception.hh>
#include <valsym/partition.hh>

#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace valsym
{
    ValueClassPartition::ValueClassPartition(vector<vector<Value>> classes) :
        _classes(std::move(classes))
    {
        for (size_t c = 0; c < _classes.size(); ++c) {
            auto & cls = _classes[c];
            for (size_t k = 0; k < cls.size(); ++k) {
                auto v = cls[k];
                if (v < 1)
                    throw InvalidProblem("partition value " + std::to_string(v) + " is not positive");
                if (k > 0 && cls[k - 1] >= v)
                    throw InvalidProblem("partition class " + std::to_string(c + 1) + " is not strictly ascending");
                auto u = static_cast<size_t>(v);
                if (u >= _class_of.size()) {
                    _class_of.resize(u + 1, -1);
                    _position.resize(u + 1, -1);
                }
                if (_class_of[u] != -1)
                    throw InvalidProblem("value " + std::to_string(v) + " appears in two partition classes");
                _class_of[u] = static_cast<int>(c);
                _position[u] = static_cast<int>(k);
            }
        }
    }

    auto ValueClassPartition::all_interchangeable(Value m) -> ValueClassPartition
    {
        vector<Value> cls;
        for (Value v = 1; v <= m; ++v)
            cls.push_back(v);
        return ValueClassPartition{{cls}};
    }

    auto ValueClassPartition::class_of(Value v) const -> optional<size_t>
    {
        if (v < 0 || static_cast<size_t>(v) >= _class_of.size() || _class_of[static_cast<size_t>(v)] < 0)
            return std::nullopt;
        return static_cast<size_t>(_class_of[static_cast<size_t>(v)]);
    }

    auto ValueClassPartition::position_in_class(Value v) const -> optional<size_t>
    {
        if (v < 0 || static_cast<size_t>(v) >= _position.size() || _position[static_cast<size_t>(v)] < 0)
            return std::nullopt;
        return static_cast<size_t>(_position[static_cast<size_t>(v)]);
    }

    auto ValueClassPartition::max_value() const -> Value
    {
        return _class_of.empty() ? 0 : static_cast<Value>(_class_of.size()) - 1;
    }

    auto ValueClassPartition::classified_count() const -> size_t
    {
        size_t n = 0;
        for (auto & c : _classes)
            n += c.size();
        return n;
    }

    auto ValueClassPartition::check_within(Value m) const -> void
    {
        if (max_value() > m)
            throw InvalidProblem("partition value " + std::to_string(max_value()) + " exceeds value count " + std::to_string(m));
    }

    auto ValueClassPartition::to_string() const -> string
    {
        std::ostringstream s;
        s << '[';
        for (size_t c = 0; c < _classes.size(); ++c) {
            s << (c ? ",{" : "{");
            for (size_t k = 0; k < _classes[c].size(); ++k)
                s << (k ? "," : "") << _classes[c][k];
            s << '}';
        }
        s << ']';
        return s.str();
    }
}
