#include <valsym/exception.hh>
#include <valsym/problem_io.hh>

using nlohmann::ordered_json;
using std::size_t;
using std::string;
using std::vector;

namespace valsym
{
    namespace
    {
        inline constexpr size_t max_domain_cells = 100'000'000;

        [[noreturn]] auto fail(const string & what) -> void
        {
            throw InvalidProblem(what);
        }

        auto field(const ordered_json & j, const char * key, const string & where) -> const ordered_json &
        {
            if (! j.is_object() || ! j.contains(key))
                fail(where + ": missing field \"" + key + "\"");
            return j.at(key);
        }

        auto as_int(const ordered_json & j, const string & where) -> long
        {
            if (! j.is_number_integer())
                fail(where + ": expected an integer");
            return j.get<long>();
        }

        auto as_var(const ordered_json & j, size_t variables, const string & where) -> VarId
        {
            auto v = as_int(j, where);
            if (v < 1 || static_cast<size_t>(v) > variables)
                fail(where + ": variable " + std::to_string(v) + " outside 1.." + std::to_string(variables));
            return static_cast<VarId>(v - 1);
        }

        auto as_value(const ordered_json & j, const string & where) -> Value
        {
            auto v = as_int(j, where);
            if (v < 1 || v > 1'000'000)
                fail(where + ": value " + std::to_string(v) + " out of range");
            return static_cast<Value>(v);
        }

        auto as_count(const ordered_json & j, const string & where) -> size_t
        {
            auto v = as_int(j, where);
            if (v < 0 || v > 1'000'000)
                fail(where + ": count out of range");
            return static_cast<size_t>(v);
        }

        auto as_array(const ordered_json & j, const string & where) -> const ordered_json &
        {
            if (! j.is_array())
                fail(where + ": expected an array");
            return j;
        }

        auto as_vars(const ordered_json & j, size_t variables, const string & where) -> vector<VarId>
        {
            vector<VarId> result;
            for (auto & e : as_array(j, where))
                result.push_back(as_var(e, variables, where));
            return result;
        }

        auto as_values(const ordered_json & j, const string & where) -> vector<Value>
        {
            vector<Value> result;
            for (auto & e : as_array(j, where))
                result.push_back(as_value(e, where));
            return result;
        }

        auto as_parity(const ordered_json & j, const string & where) -> Parity
        {
            if (j == "odd")
                return Parity::Odd;
            if (j == "even")
                return Parity::Even;
            fail(where + ": parity must be \"odd\" or \"even\"");
        }

        auto parity_json(Parity p) -> const char *
        {
            return p == Parity::Odd ? "odd" : "even";
        }

        auto vars_json(const vector<VarId> & vars) -> ordered_json
        {
            auto result = ordered_json::array();
            for (auto v : vars)
                result.push_back(v + 1);
            return result;
        }

        auto domains_from_json(const ordered_json & j, size_t expected, Value max_value, const string & where) -> DomainSet
        {
            auto & arr = as_array(j, where);
            if (arr.size() != expected)
                fail(where + ": expected " + std::to_string(expected) + " domains, got " + std::to_string(arr.size()));
            DomainSet result;
            for (size_t k = 0; k < arr.size(); ++k) {
                auto here = where + "[" + std::to_string(k + 1) + "]";
                Domain d;
                for (auto v : as_values(arr[k], here)) {
                    if (v > max_value)
                        fail(here + ": value " + std::to_string(v) + " exceeds " + std::to_string(max_value));
                    d.insert(v);
                }
                result.push_back(std::move(d));
            }
            return result;
        }

        auto domains_json(const DomainSet & d) -> ordered_json
        {
            auto result = ordered_json::array();
            for (auto & x : d)
                result.push_back(x.values());
            return result;
        }
    }

    auto constraint_from_json(const ordered_json & j, size_t variables) -> Constraint
    {
        auto type = field(j, "type", "constraint");
        if (! type.is_string())
            fail("constraint: \"type\" must be a string");
        auto t = type.get<string>();
        auto where = "constraint " + t;
        auto var = [&](const char * k) { return as_var(field(j, k, where), variables, where + "." + k); };
        auto val = [&](const char * k) { return as_value(field(j, k, where), where + "." + k); };

        if (t == "lex_leq_permuted")
            return LexLeqPermuted{Permutation::from_images(as_values(field(j, "perm", where), where + ".perm")),
                as_vars(field(j, "scope", where), variables, where + ".scope")};
        if (t == "precedence")
            return Precedence{as_values(field(j, "class", where), where + ".class"),
                as_vars(field(j, "scope", where), variables, where + ".scope")};
        if (t == "imp_eq_leq")
            return ImpEqLeq{var("x"), val("j"), var("z"), val("i")};
        if (t == "imp_eq_eq")
            return ImpEqEq{var("z"), val("i"), var("x"), val("j")};
        if (t == "strict_less")
            return StrictLess{var("lhs"), var("rhs")};
        if (t == "disjunction_eq")
            return DisjunctionEq{val("value"), as_vars(field(j, "scope", where), variables, where + ".scope")};
        if (t == "parity_link")
            return ParityLink{var("cond"), as_parity(field(j, "cond_parity", where), where), var("target"),
                as_parity(field(j, "target_parity", where), where)};
        if (t == "at_least_n_values") {
            auto prefix = as_count(field(j, "prefix", where), where + ".prefix");
            if (prefix > variables)
                fail(where + ": prefix exceeds the variable count");
            return AtLeastNValues{prefix, as_count(field(j, "distinct", where), where + ".distinct")};
        }
        if (t == "conditional")
            return make_conditional(var("cond"), as_parity(field(j, "parity", where), where),
                constraint_from_json(field(j, "inner", where), variables));
        fail("unknown constraint type \"" + t + "\"");
    }

    auto constraint_to_json(const Constraint & c) -> ordered_json
    {
        ordered_json j;
        j["type"] = c.name();
        if (auto p = c.get_if<LexLeqPermuted>()) {
            j["perm"] = p->perm.images();
            j["scope"] = vars_json(p->vars);
        }
        else if (auto p = c.get_if<Precedence>()) {
            j["class"] = p->values;
            j["scope"] = vars_json(p->vars);
        }
        else if (auto p = c.get_if<ImpEqLeq>()) {
            j["x"] = p->x + 1;
            j["j"] = p->j;
            j["z"] = p->z + 1;
            j["i"] = p->i;
        }
        else if (auto p = c.get_if<ImpEqEq>()) {
            j["z"] = p->z + 1;
            j["i"] = p->i;
            j["x"] = p->x + 1;
            j["j"] = p->j;
        }
        else if (auto p = c.get_if<StrictLess>()) {
            j["lhs"] = p->lhs + 1;
            j["rhs"] = p->rhs + 1;
        }
        else if (auto p = c.get_if<DisjunctionEq>()) {
            j["value"] = p->value;
            j["scope"] = vars_json(p->vars);
        }
        else if (auto p = c.get_if<ParityLink>()) {
            j["cond"] = p->cond + 1;
            j["cond_parity"] = parity_json(p->cond_parity);
            j["target"] = p->target + 1;
            j["target_parity"] = parity_json(p->target_parity);
        }
        else if (auto p = c.get_if<AtLeastNValues>()) {
            j["prefix"] = p->prefix;
            j["distinct"] = p->distinct;
        }
        else if (auto p = c.get_if<Conditional>()) {
            j["cond"] = p->cond + 1;
            j["parity"] = parity_json(p->parity);
            j["inner"] = constraint_to_json(*p->inner);
        }
        return j;
    }

    auto parse_problem(std::string_view text) -> ProblemFile
    {
        ordered_json doc;
        try {
            doc = ordered_json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InvalidProblem(string("malformed JSON: ") + e.what());
        }
        if (! doc.is_object())
            fail("problem document must be a JSON object");

        if (doc.contains("format") && as_int(doc["format"], "format") != problem_format_version)
            fail("unsupported format version " + doc["format"].dump());

        ProblemFile f;
        auto & prob = f.problem;
        auto n = as_count(field(doc, "variables", "problem"), "variables");
        auto m = as_int(field(doc, "values", "problem"), "values");
        if (m < 0 || m > 1'000'000)
            fail("values: out of range");
        prob.value_count = static_cast<Value>(m);
        if (n * static_cast<size_t>(m + 1) > max_domain_cells)
            fail("variables x values exceeds " + std::to_string(max_domain_cells));

        if (doc.contains("domains"))
            prob.domains = domains_from_json(doc["domains"], n, prob.value_count, "domains");
        else
            prob.domains.assign(n, Domain::range(1, prob.value_count));

        if (doc.contains("classes")) {
            vector<vector<Value>> classes;
            for (auto & cls : as_array(doc["classes"], "classes"))
                classes.push_back(as_values(cls, "classes"));
            prob.partition = ValueClassPartition{classes};
        }

        if (doc.contains("dual_domains"))
            f.dual_domains = domains_from_json(doc["dual_domains"], static_cast<size_t>(m), static_cast<Value>(n) + prob.value_count,
                "dual_domains");

        if (doc.contains("constraints"))
            for (auto & c : as_array(doc["constraints"], "constraints"))
                prob.constraints.push_back(constraint_from_json(c, n));

        prob.validate();
        return f;
    }

    auto problem_to_json(const ProblemFile & f) -> ordered_json
    {
        auto & prob = f.problem;
        ordered_json j;
        j["format"] = problem_format_version;
        j["variables"] = prob.variable_count();
        j["values"] = prob.value_count;
        j["domains"] = domains_json(prob.domains);
        if (prob.partition)
            j["classes"] = prob.partition->classes();
        if (f.dual_domains)
            j["dual_domains"] = domains_json(*f.dual_domains);
        auto cs = ordered_json::array();
        for (auto & c : prob.constraints)
            cs.push_back(constraint_to_json(c));
        j["constraints"] = cs;
        return j;
    }

    auto write_problem(const ProblemFile & f) -> string
    {
        return problem_to_json(f).dump(2) + "\n";
    }
}
