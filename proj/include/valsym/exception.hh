#ifndef VALSYM_EXCEPTION_HH
#define VALSYM_EXCEPTION_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valsym
{
    /// Thrown when a structurally invalid problem or constraint is constructed.
    class InvalidProblem : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Thrown when an operation is called outside its contract, e.g. a
    /// partial assignment handed to a checker that needs a total one.
    class ContractViolation : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// An enumeration oracle refused to run because its search space is larger
    /// than the configured budget. Never silently truncated.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        BudgetExceeded(const std::string & what, std::size_t requested, std::size_t budget) :
            std::runtime_error(what + " (needs " + std::to_string(requested) + ", budget " + std::to_string(budget) + ")"),
            _requested(requested),
            _budget(budget)
        {
        }

        [[nodiscard]] auto requested() const -> std::size_t { return _requested; }
        [[nodiscard]] auto budget() const -> std::size_t { return _budget; }

    private:
        std::size_t _requested;
        std::size_t _budget;
    };

    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & what, std::size_t line) :
            std::runtime_error("line " + std::to_string(line) + ": " + what),
            _line(line)
        {
        }

        [[nodiscard]] auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };
}

#endif
