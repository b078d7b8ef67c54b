#include <valsym/dimacs.hh>
#include <valsym/exception.hh>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace valsym
{
    namespace
    {
        auto tokens(string_view line) -> vector<string_view>
        {
            vector<string_view> result;
            size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                auto start = i;
                while (i < line.size() && ! (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                if (i > start)
                    result.push_back(line.substr(start, i - start));
            }
            return result;
        }

        auto to_int(string_view token, size_t line) -> long
        {
            long value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size())
                throw ParseError("expected an integer, got '" + string(token) + "'", line);
            return value;
        }
    }

    auto parse_dimacs(string_view text) -> CNFFormula
    {
        CNFFormula f;
        bool have_header = false;
        long declared_clauses = 0;
        vector<Literal> current;
        size_t line_no = 0, current_start = 0;

        size_t pos = 0;
        while (pos <= text.size()) {
            auto eol = text.find('\n', pos);
            if (eol == string_view::npos)
                eol = text.size();
            auto line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;

            auto toks = tokens(line);
            if (toks.empty() || toks[0][0] == 'c' || toks[0] == "%")
                continue;

            if (toks[0] == "p") {
                if (have_header)
                    throw ParseError("second problem line", line_no);
                if (toks.size() != 4 || toks[1] != "cnf")
                    throw ParseError("problem line must be 'p cnf <variables> <clauses>'", line_no);
                auto vars = to_int(toks[2], line_no);
                declared_clauses = to_int(toks[3], line_no);
                if (vars < 0 || declared_clauses < 0 || vars > 1'000'000)
                    throw ParseError("problem line counts out of range", line_no);
                f.variable_count = static_cast<int>(vars);
                have_header = true;
                continue;
            }

            if (! have_header)
                throw ParseError("clause before the problem line", line_no);

            for (auto t : toks) {
                auto lit = to_int(t, line_no);
                if (lit == 0) {
                    if (current.empty())
                        throw ParseError("empty clause", line_no);
                    f.clauses.push_back(std::move(current));
                    current.clear();
                    continue;
                }
                if (lit < -f.variable_count || lit > f.variable_count)
                    throw ParseError("literal " + string(t) + " outside 1.." + std::to_string(f.variable_count), line_no);
                if (current.empty())
                    current_start = line_no;
                current.push_back(static_cast<Literal>(lit));
            }
        }

        if (! have_header)
            throw ParseError("missing problem line", line_no);
        if (! current.empty())
            throw ParseError("clause not terminated by 0", current_start);
        if (static_cast<long>(f.clauses.size()) != declared_clauses)
            throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " + std::to_string(f.clauses.size()),
                line_no);
        return f;
    }

    auto to_dimacs(const CNFFormula & f) -> string
    {
        std::ostringstream s;
        s << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
        for (auto & clause : f.clauses) {
            for (auto lit : clause)
                s << lit << ' ';
            s << "0\n";
        }
        return s.str();
    }

    auto brute_force_satisfiable(const CNFFormula & f) -> bool
    {
        if (f.variable_count > 24)
            throw BudgetExceeded("brute-force SAT", size_t{1} << 24, size_t{1} << 24);
        auto total = std::uint64_t{1} << f.variable_count;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            bool all = true;
            for (auto & clause : f.clauses) {
                bool sat = false;
                for (auto lit : clause) {
                    bool value = (bits >> (std::abs(lit) - 1)) & 1u;
                    if ((lit > 0) == value) {
                        sat = true;
                        break;
                    }
                }
                if (! sat) {
                    all = false;
                    break;
                }
            }
            if (all)
                return true;
        }
        return false;
    }
}
