#ifndef VALSYM_PROBLEM_IO_HH
#define VALSYM_PROBLEM_IO_HH

#include <valsym/problem.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace valsym
{
    inline constexpr int problem_format_version = 1;

    /// The JSON problem document. Variables are numbered from 1 in the file.
    ///
    ///   {"format": 1, "variables": n, "values": m,
    ///    "domains": [[...], ...],              optional, default {1..m} each
    ///    "classes": [[...], ...],              optional
    ///    "dual_domains": [[...], ...],         optional, Z_1..Z_m for the dual encoding
    ///    "constraints": [{"type": ..., ...}]}  optional
    struct ProblemFile
    {
        Problem problem;
        std::optional<DomainSet> dual_domains;
    };

    /// Throws InvalidProblem with a diagnostic on malformed JSON or schema violations.
    [[nodiscard]] auto parse_problem(std::string_view text) -> ProblemFile;

    [[nodiscard]] auto constraint_to_json(const Constraint & c) -> nlohmann::ordered_json;
    [[nodiscard]] auto constraint_from_json(const nlohmann::ordered_json & j, std::size_t variables) -> Constraint;

    [[nodiscard]] auto problem_to_json(const ProblemFile & f) -> nlohmann::ordered_json;

    /// Pretty-printed document ending in a newline.
    [[nodiscard]] auto write_problem(const ProblemFile & f) -> std::string;
}

#endif
