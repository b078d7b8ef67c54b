#include "cli.hh"

#include <valsym/consistency.hh>
#include <valsym/exception.hh>
#include <valsym/instances.hh>
#include <valsym/problem_io.hh>
#include <valsym/propagation.hh>
#include <valsym/search.hh>
#include <valsym/symmetry.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using json = nlohmann::ordered_json;
using std::optional;
using std::ostream;
using std::size_t;
using std::string;
using std::vector;

namespace valsym::cli
{
    namespace
    {
        enum class Method
        {
            None,
            Precedence,
            GeneratorLex,
            Puget,
            GeTree
        };

        const std::map<string, Method> method_names{
            {"none", Method::None},
            {"precedence", Method::Precedence},
            {"generator-lex", Method::GeneratorLex},
            {"puget", Method::Puget},
            {"ge-tree", Method::GeTree},
        };

        auto method_name(Method m) -> string
        {
            for (auto & [name, value] : method_names)
                if (value == m)
                    return name;
            return "?";
        }

        auto budget() -> size_t
        {
            auto * env = std::getenv("VALSYM_BUDGET");
            if (! env || ! *env)
                return default_budget;
            string text = env;
            size_t value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
                throw InvalidProblem("VALSYM_BUDGET must be a positive integer, got '" + text + "'");
            return value;
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw InvalidProblem("cannot read " + path);
            std::ostringstream s;
            s << in.rdbuf();
            return s.str();
        }

        auto write_output(const string & path, const string & text, ostream & out) -> void
        {
            if (path.empty() || path == "-") {
                out << text;
                return;
            }
            std::ofstream f(path, std::ios::binary);
            if (! f)
                throw InvalidProblem("cannot write " + path);
            f << text;
        }

        auto need_partition(const Problem & p, Method m) -> const ValueClassPartition &
        {
            if (! p.partition)
                throw InvalidProblem("method " + method_name(m) + " needs \"classes\" in the problem file");
            return *p.partition;
        }

        struct Prepared
        {
            Problem problem;
            optional<PugetEncoding> puget;
            SearchMode mode = SearchMode::Static;
        };

        auto prepare(const ProblemFile & f, Method m) -> Prepared
        {
            Prepared r{f.problem, std::nullopt, SearchMode::Static};
            switch (m) {
                case Method::None:
                    break;
                case Method::Precedence:
                    r.problem = with_constraints(f.problem, build_precedence(f.problem, need_partition(f.problem, m)));
                    break;
                case Method::GeneratorLex:
                    r.problem = with_constraints(f.problem, build_generator_lex(f.problem, need_partition(f.problem, m)));
                    break;
                case Method::Puget:
                    r.puget = build_puget(f.problem, need_partition(f.problem, m));
                    if (f.dual_domains)
                        for (Value j = 1; j <= f.problem.value_count; ++j)
                            r.puget->problem.domains[r.puget->dual_of(j)] = (*f.dual_domains)[static_cast<size_t>(j - 1)];
                    r.problem = r.puget->problem;
                    break;
                case Method::GeTree:
                    need_partition(f.problem, m);
                    r.mode = SearchMode::GeTree;
                    break;
            }
            return r;
        }

        /// X1.. for problem variables, Z1.. for dual variables of an encoding.
        class Labeller
        {
        public:
            explicit Labeller(const optional<PugetEncoding> & enc)
            {
                if (enc)
                    for (size_t j = 0; j < enc->dual.size(); ++j)
                        _dual[enc->dual[j]] = j + 1;
            }

            [[nodiscard]] auto operator()(VarId v) const -> string
            {
                auto it = _dual.find(v);
                if (it != _dual.end())
                    return "Z" + std::to_string(it->second);
                return "X" + std::to_string(v + 1);
            }

        private:
            std::map<VarId, size_t> _dual;
        };

        auto cause_label(const Problem & p, size_t cause) -> string
        {
            if (cause == oracle_cause)
                return "oracle";
            if (cause == singleton_cause)
                return "singleton";
            if (cause < p.constraints.size())
                return "#" + std::to_string(cause) + " " + p.constraints[cause].name();
            return "?";
        }

        auto yes_no(bool b) -> string { return b ? "yes" : "no"; }

        /// Left-aligned first column, right-aligned others.
        auto print_table(ostream & out, const vector<string> & header, const vector<vector<string>> & rows) -> void
        {
            vector<size_t> width(header.size());
            for (size_t c = 0; c < header.size(); ++c) {
                width[c] = header[c].size();
                for (auto & r : rows)
                    width[c] = std::max(width[c], r[c].size());
            }
            auto line = [&](const vector<string> & r) {
                string s;
                for (size_t c = 0; c < r.size(); ++c) {
                    auto pad = string(width[c] - r[c].size(), ' ');
                    if (c > 0)
                        s += "  ";
                    s += c == 0 ? r[c] + pad : pad + r[c];
                }
                while (! s.empty() && s.back() == ' ')
                    s.pop_back();
                out << s << '\n';
            };
            line(header);
            for (auto & r : rows)
                line(r);
        }

        auto join(const Assignment & a) -> string
        {
            string s;
            for (size_t i = 0; i < a.size(); ++i)
                s += (i ? " " : "") + std::to_string(a[i]);
            return s;
        }

        auto stats_json(const SearchStats & s) -> json
        {
            json j;
            j["nodes"] = s.nodes;
            j["branches"] = s.branches;
            j["backtracks"] = s.backtracks;
            j["prunings"] = s.prunings;
            j["solutions"] = s.solutions;
            j["completed"] = s.completed;
            return j;
        }

        auto millis(std::chrono::nanoseconds t) -> string
        {
            std::ostringstream s;
            s << std::fixed << std::setprecision(3) << static_cast<double>(t.count()) / 1e6;
            return s.str();
        }

        // solve

        struct SolveOptions
        {
            string file;
            string method = "none";
            string goal = "all";
            string var_order = "lex";
            optional<long> time_limit_ms;
            bool no_timing = false;
        };

        const std::map<string, Goal> goal_names{{"first", Goal::First}, {"all", Goal::All}, {"count", Goal::Count}};
        const std::map<string, VarOrder> order_names{{"lex", VarOrder::Lex}, {"min-domain", VarOrder::MinDomain}};

        auto cmd_solve(const SolveOptions & o, ostream & out) -> int
        {
            auto method = method_names.at(o.method);
            auto file = parse_problem(read_file(o.file));
            auto prep = prepare(file, method);

            Strategy s;
            s.var_order = order_names.at(o.var_order);
            s.mode = prep.mode;
            if (o.time_limit_ms)
                s.time_limit = std::chrono::milliseconds{*o.time_limit_ms};
            auto result = solve(prep.problem, prep.problem.domains, s, goal_names.at(o.goal));
            if (prep.puget)
                for (auto & a : result.solutions)
                    a = prep.puget->project(a);

            auto & st = result.stats;
            string status = ! st.completed && st.solutions == 0 ? "unknown" : st.solutions > 0 ? "satisfiable" : "unsatisfiable";

            out << "method: " << o.method << '\n';
            out << "goal: " << o.goal << '\n';
            out << "var-order: " << o.var_order << '\n';
            out << "status: " << status << '\n';
            if (o.goal == "count")
                out << "count: " << st.solutions << '\n';
            for (auto & a : result.solutions)
                out << "solution: " << join(a) << '\n';

            json record;
            record["format"] = problem_format_version;
            record["command"] = "solve";
            record["method"] = o.method;
            record["goal"] = o.goal;
            record["var_order"] = o.var_order;
            record["status"] = status;
            auto stats = stats_json(st);
            for (auto & [k, v] : stats.items())
                record[k] = v;
            out << record.dump() << '\n';

            vector<string> header{"method", "nodes", "branches", "backtracks", "prunings", "solutions", "completed"};
            vector<string> row{o.method, std::to_string(st.nodes), std::to_string(st.branches), std::to_string(st.backtracks),
                std::to_string(st.prunings), std::to_string(st.solutions), yes_no(st.completed)};
            if (! o.no_timing) {
                header.push_back("wall_ms");
                row.push_back(millis(st.wall_time));
            }
            print_table(out, header, {row});

            return status == "unsatisfiable" ? exit_unsatisfiable : exit_ok;
        }

        // propagate

        struct PropagateOptions
        {
            string file;
            string level = "gac";
            string method = "none";
        };

        auto print_prunings(ostream & out, const Problem & p, const Labeller & label, PropagationOutcome outcome) -> void
        {
            std::ranges::sort(outcome.prunings, [](const Pruning & a, const Pruning & b) {
                return std::pair{a.var, a.value} < std::pair{b.var, b.value};
            });
            out << "wipeout: " << yes_no(outcome.wipeout) << '\n';
            out << "prunings: " << outcome.prunings.size() << '\n';
            vector<vector<string>> rows;
            for (auto & pr : outcome.prunings)
                rows.push_back({label(pr.var), std::to_string(pr.value), cause_label(p, pr.cause)});
            if (! rows.empty())
                print_table(out, {"var", "value", "cause"}, rows);
        }

        auto oracle_valsymbreak_gac(const Problem & p, size_t limit) -> PropagationOutcome
        {
            vector<VarId> all(p.variable_count());
            for (VarId v = 0; v < all.size(); ++v)
                all[v] = v;
            auto holds = [&](const Assignment & a) {
                for (auto & c : p.constraints)
                    if (! c.check(a))
                        return false;
                return ! p.partition || valsymbreak_holds(a, *p.partition);
            };
            return brute_force_gac(all, holds, p.domains, limit);
        }

        auto cmd_propagate(const PropagateOptions & o, ostream & out) -> int
        {
            auto method = method_names.at(o.method);
            auto file = parse_problem(read_file(o.file));
            if (method == Method::GeTree)
                throw InvalidProblem("ge-tree is a search strategy and posts no constraints to propagate");

            out << "level: " << o.level << '\n';
            out << "method: " << o.method << '\n';
            if (o.level == "oracle-gac") {
                if (method != Method::None)
                    throw InvalidProblem("oracle-gac uses the full symmetry group of \"classes\"; use --method=none");
                print_prunings(out, file.problem, Labeller{std::nullopt}, oracle_valsymbreak_gac(file.problem, budget()));
                return exit_ok;
            }

            auto prep = prepare(file, method);
            auto outcome = o.level == "sac" ? enforce_sac(prep.problem, prep.problem.domains)
                                            : propagate_fixpoint(prep.problem, prep.problem.domains);
            print_prunings(out, prep.problem, Labeller{prep.puget}, outcome);
            return exit_ok;
        }

        // compare

        using PairSet = std::set<std::pair<VarId, Value>>;

        auto x_pairs(const PropagationOutcome & o, const DomainSet & initial, size_t n) -> PairSet
        {
            PairSet s;
            for (VarId v = 0; v < n; ++v) {
                if (o.wipeout)
                    initial[v].for_each([&](Value x) { s.emplace(v, x); });
                else
                    initial[v].for_each([&](Value x) {
                        if (! o.final_domains[v].contains(x))
                            s.emplace(v, x);
                    });
            }
            return s;
        }

        auto subset(const PairSet & a, const PairSet & b) -> bool { return std::ranges::includes(b, a); }

        auto relation(const PairSet & a, const PairSet & b) -> string
        {
            bool ab = subset(a, b), ba = subset(b, a);
            if (ab && ba)
                return "=";
            if (ab)
                return "<";
            if (ba)
                return ">";
            return "~";
        }

        auto cmd_compare(const string & path, ostream & out) -> int
        {
            auto file = parse_problem(read_file(path));
            Problem sym = file.problem;
            sym.constraints.clear();
            auto & part = need_partition(sym, Method::Precedence);
            auto n = sym.variable_count();

            auto lex = propagate_fixpoint(build_generator_lex(sym, part), sym.domains);
            auto prec = propagate_fixpoint(build_precedence(sym, part), sym.domains);
            auto enc = prepare(ProblemFile{sym, file.dual_domains}, Method::Puget);
            auto puget_ac = propagate_fixpoint(enc.problem, enc.problem.domains);
            auto puget_sac = enforce_sac(enc.problem, enc.problem.domains);
            auto oracle = oracle_valsymbreak_gac(sym, budget());

            vector<std::pair<string, PairSet>> sets{
                {"generator-lex", x_pairs(lex, sym.domains, n)},
                {"precedence", x_pairs(prec, sym.domains, n)},
                {"puget-ac", x_pairs(puget_ac, sym.domains, n)},
                {"puget-sac", x_pairs(puget_sac, sym.domains, n)},
                {"oracle", x_pairs(oracle, sym.domains, n)},
            };

            out << "variables: " << n << '\n';
            vector<vector<string>> rows;
            for (auto & [name, s] : sets) {
                string pairs;
                for (auto & [v, x] : s)
                    pairs += (pairs.empty() ? "" : " ") + ("X" + std::to_string(v + 1)) + "=" + std::to_string(x);
                rows.push_back({name, std::to_string(s.size()), pairs.empty() ? "-" : pairs});
            }
            print_table(out, {"method", "prunings", "pruned"}, rows);

            out << "lattice (row relation column, < is proper subset):\n";
            vector<string> header{""};
            for (auto & [name, s] : sets)
                header.push_back(name);
            rows.clear();
            for (auto & [a, sa] : sets) {
                vector<string> r{a};
                for (auto & [b, sb] : sets)
                    r.push_back(relation(sa, sb));
                rows.push_back(r);
            }
            print_table(out, header, rows);

            auto index = [&](const string & name) -> const PairSet & {
                return std::ranges::find(sets, name, &std::pair<string, PairSet>::first)->second;
            };
            vector<std::pair<string, string>> required{{"generator-lex", "puget-ac"}, {"puget-ac", "puget-sac"}};
            for (auto & [name, s] : sets)
                if (name != "oracle")
                    required.emplace_back(name, "oracle");
            size_t violations = 0;
            for (auto & [a, b] : required)
                if (! subset(index(a), index(b))) {
                    ++violations;
                    out << "violation: " << a << " prunes a value " << b << " keeps\n";
                }
            out << "violations: " << violations << '\n';
            return violations ? exit_failure : exit_ok;
        }

        // bench-getree

        struct BenchOptions
        {
            size_t n_min = 4;
            size_t n_max = 10;
            long timeout_ms = 60000;
            string var_order = "lex";
            string format = "csv";
        };

        auto cmd_bench(const BenchOptions & o, ostream & out) -> int
        {
            if (o.n_min < 1 || o.n_max < o.n_min)
                throw InvalidProblem("need 1 <= n-min <= n-max");

            Strategy s;
            s.var_order = order_names.at(o.var_order);
            s.time_limit = std::chrono::milliseconds{o.timeout_ms};

            vector<string> header{"n", "static_prunings", "static_nodes", "static_branches", "getree_nodes", "getree_branches",
                "ratio", "status"};
            vector<vector<string>> rows;
            size_t previous = 0;
            bool failed = false;
            for (size_t n = o.n_min; n <= o.n_max; ++n) {
                auto prob = pigeonhole_model(n);
                auto with_prec = with_constraints(prob, build_precedence(prob, *prob.partition));
                s.mode = SearchMode::Static;
                auto st = solve(with_prec, with_prec.domains, s, Goal::Count).stats;
                s.mode = SearchMode::GeTree;
                auto ge = solve(prob, prob.domains, s, Goal::Count).stats;

                string ratio, status = "ok";
                if (! st.completed || ! ge.completed) {
                    status = "timeout";
                    previous = 0;
                }
                else {
                    if (previous > 0) {
                        auto r = static_cast<double>(ge.branches) / static_cast<double>(previous);
                        std::ostringstream text;
                        text << std::fixed << std::setprecision(3) << r;
                        ratio = text.str();
                        if (r <= 2.0) {
                            status = "ratio<=2";
                            failed = true;
                        }
                    }
                    previous = ge.branches;
                }
                rows.push_back({std::to_string(n), std::to_string(st.prunings), std::to_string(st.nodes), std::to_string(st.branches),
                    std::to_string(ge.nodes), std::to_string(ge.branches), ratio, status});
            }

            if (o.format == "table")
                print_table(out, header, rows);
            else {
                auto csv = [&](const vector<string> & r) {
                    for (size_t i = 0; i < r.size(); ++i)
                        out << (i ? "," : "") << r[i];
                    out << '\n';
                };
                out << "# format=" << problem_format_version << '\n';
                csv(header);
                for (auto & r : rows)
                    csv(r);
            }
            return failed ? exit_failure : exit_ok;
        }

        // reduce

        struct ReduceOptions
        {
            string cnf;
            string output;
            bool check = false;
        };

        inline constexpr int check_max_variables = 3;

        auto cmd_reduce(const ReduceOptions & o, ostream & out) -> int
        {
            auto formula = parse_dimacs(read_file(o.cnf));
            auto red = reduce_3sat(formula);
            auto text = write_problem(ProblemFile{red.problem, std::nullopt});
            if (! o.check) {
                write_output(o.output, text, out);
                return exit_ok;
            }
            if (formula.variable_count > check_max_variables) {
                out << "refused: --check enumerates supports and is limited to " << check_max_variables << " Boolean variables, got "
                    << formula.variable_count << '\n';
                return exit_budget;
            }
            if (! o.output.empty())
                write_output(o.output, text, out);
            auto support = reduction_support_exists(red, budget());
            auto sat = brute_force_satisfiable(formula);
            out << "variables: " << formula.variable_count << '\n';
            out << "clauses: " << formula.clauses.size() << '\n';
            out << "support exists: " << yes_no(support) << ", SAT: " << yes_no(sat) << '\n';
            out << "agreement: " << yes_no(support == sat) << '\n';
            return support == sat ? exit_ok : exit_failure;
        }

        // kcheck

        auto cmd_kcheck(const string & family, size_t k, ostream & out) -> int
        {
            if (family != "thm7")
                throw InvalidProblem("kcheck supports --family thm7 only");
            if (k < 1)
                throw InvalidProblem("--k must be at least 1");
            auto enc = thm7_family(k);
            Labeller label{enc};
            auto limit = budget();

            out << "family: thm7\n";
            out << "k: " << k << '\n';
            out << "variables: " << enc.problem.variable_count() << '\n';
            vector<vector<string>> rows;
            optional<ConsistencyReport> first_failure;
            bool strong = true;
            for (size_t j = 1; j <= k + 1; ++j) {
                auto rep = is_k_consistent(enc.problem, j, limit);
                if (! rep.holds && ! first_failure)
                    first_failure = rep;
                strong = strong && rep.holds;
                rows.push_back({std::to_string(j), yes_no(rep.holds), yes_no(strong)});
            }
            print_table(out, {"j", "consistent", "strongly"}, rows);
            if (first_failure && first_failure->witness) {
                auto & w = *first_failure->witness;
                string a;
                for (auto & [v, x] : w.assignment)
                    a += (a.empty() ? "" : " ") + label(v) + "=" + std::to_string(x);
                out << "first failure: j=" << first_failure->level << ": {" << a << "} does not extend to "
                    << label(w.unextendable) << '\n';
            }
            return exit_ok;
        }

        // generate

        auto cmd_generate(const string & family, size_t param, const string & output, ostream & out) -> int
        {
            ProblemFile f;
            if (family == "thm5") {
                auto ex = thm5_example();
                f = ProblemFile{ex.problem, ex.dual_domains};
            }
            else {
                auto p = family_by_name(family, param);
                if (! p)
                    throw InvalidProblem("unknown family '" + family + "' (pigeonhole, thm4, thm5, thm7)");
                f.problem = *p;
            }
            write_output(output, write_problem(f), out);
            return exit_ok;
        }
    }

    auto run(int argc, const char * const * argv, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Value symmetry breaking laboratory"};
        app.require_subcommand(1);

        auto method_check = CLI::IsMember(method_names);
        auto order_check = CLI::IsMember(order_names);

        SolveOptions solve_opts;
        auto * solve_cmd = app.add_subcommand("solve", "Search a problem file, optionally with symmetry breaking");
        solve_cmd->add_option("file", solve_opts.file, "Problem file (JSON)")->required();
        solve_cmd->add_option("--method", solve_opts.method, "Symmetry breaking method")->check(method_check);
        solve_cmd->add_option("--goal", solve_opts.goal, "first, all or count")->check(CLI::IsMember(goal_names));
        solve_cmd->add_option("--var-order", solve_opts.var_order, "lex or min-domain")->check(order_check);
        solve_cmd->add_option("--time-limit-ms", solve_opts.time_limit_ms, "Stop the search after this long");
        solve_cmd->add_flag("--no-timing", solve_opts.no_timing, "Omit wall time from the table");

        PropagateOptions prop_opts;
        auto * prop_cmd = app.add_subcommand("propagate", "Print the prunings of one propagation pass to fixpoint");
        prop_cmd->add_option("file", prop_opts.file, "Problem file (JSON)")->required();
        prop_cmd->add_option("--level", prop_opts.level, "ac, gac, sac or oracle-gac")
            ->check(CLI::IsMember({"ac", "gac", "sac", "oracle-gac"}));
        prop_cmd->add_option("--method", prop_opts.method, "Symmetry breaking method")->check(method_check);

        string compare_file;
        auto * compare_cmd = app.add_subcommand("compare", "Compare the filtering of every method on the symmetry alone");
        compare_cmd->add_option("file", compare_file, "Problem file (JSON) with classes")->required();

        BenchOptions bench_opts;
        auto * bench_cmd = app.add_subcommand("bench-getree", "Static precedence against GE-tree search on pigeonhole models");
        bench_cmd->add_option("--n-min", bench_opts.n_min, "Smallest n");
        bench_cmd->add_option("--n-max", bench_opts.n_max, "Largest n");
        bench_cmd->add_option("--timeout-ms", bench_opts.timeout_ms, "Per-search time limit");
        bench_cmd->add_option("--var-order", bench_opts.var_order, "lex or min-domain")->check(order_check);
        bench_cmd->add_option("--format", bench_opts.format, "csv or table")->check(CLI::IsMember({"csv", "table"}));

        ReduceOptions reduce_opts;
        auto * reduce_cmd = app.add_subcommand("reduce", "Build the CSP of the 3-SAT reduction from a DIMACS file");
        reduce_cmd->add_option("--cnf", reduce_opts.cnf, "DIMACS cnf file")->required();
        reduce_cmd->add_option("--output,-o", reduce_opts.output, "Write the problem file here");
        reduce_cmd->add_flag("--check", reduce_opts.check, "Compare support existence with brute-force SAT");

        string kcheck_family;
        size_t kcheck_k = 0;
        auto * kcheck_cmd = app.add_subcommand("kcheck", "Naive strong k-consistency check of an instance family");
        kcheck_cmd->add_option("--family", kcheck_family, "Family name")->required();
        kcheck_cmd->add_option("--k", kcheck_k, "k")->required();

        string gen_family, gen_output;
        size_t gen_param = 1;
        auto * gen_cmd = app.add_subcommand("generate", "Write a named instance as a problem file");
        gen_cmd->add_option("--family", gen_family, "pigeonhole, thm4, thm5 or thm7")->required();
        gen_cmd->add_option("--param", gen_param, "n for pigeonhole, k for thm7");
        gen_cmd->add_option("--output,-o", gen_output, "Output file");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try {
            if (*solve_cmd)
                return cmd_solve(solve_opts, out);
            if (*prop_cmd)
                return cmd_propagate(prop_opts, out);
            if (*compare_cmd)
                return cmd_compare(compare_file, out);
            if (*bench_cmd)
                return cmd_bench(bench_opts, out);
            if (*reduce_cmd)
                return cmd_reduce(reduce_opts, out);
            if (*kcheck_cmd)
                return cmd_kcheck(kcheck_family, kcheck_k, out);
            if (*gen_cmd)
                return cmd_generate(gen_family, gen_param, gen_output, out);
        }
        catch (const BudgetExceeded & e) {
            err << "budget exceeded: " << e.what() << " (raise VALSYM_BUDGET to allow more)\n";
            return exit_budget;
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const InvalidProblem & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const ContractViolation & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::exception & e) {
            err << "internal error: " << e.what() << '\n';
            return exit_failure;
        }
        return exit_usage;
    }
}
