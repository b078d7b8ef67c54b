#include <valsym/constraint.hh>
#include <valsym/exception.hh>

#include <algorithm>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace valsym
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };
        template <class... Ts>
        overloaded(Ts...) -> overloaded<Ts...>;

        auto parity_name(Parity p) -> const char *
        {
            return p == Parity::Odd ? "odd" : "even";
        }

        auto var_list(const vector<VarId> & vars) -> string
        {
            std::ostringstream s;
            for (size_t k = 0; k < vars.size(); ++k)
                s << (k ? "," : "") << 'X' << vars[k] + 1;
            return s.str();
        }

        auto value_at(const Assignment & a, VarId v) -> Value
        {
            if (v >= a.size() || a[v] == unassigned)
                throw ContractViolation("constraint checked on an assignment missing X" + std::to_string(v + 1));
            return a[v];
        }
    }

    auto Constraint::validate() -> void
    {
        _scope.clear();
        auto add = [&](VarId v) {
            if (std::find(_scope.begin(), _scope.end(), v) == _scope.end())
                _scope.push_back(v);
        };

        std::visit(overloaded{
                       [&](const LexLeqPermuted & c) {
                           for (auto v : c.vars)
                               add(v);
                           if (_scope.size() != c.vars.size())
                               throw InvalidProblem("lex constraint repeats a variable");
                       },
                       [&](const Precedence & c) {
                           for (size_t k = 0; k < c.values.size(); ++k)
                               for (size_t l = k + 1; l < c.values.size(); ++l)
                                   if (c.values[k] == c.values[l])
                                       throw InvalidProblem("precedence class repeats value " + std::to_string(c.values[k]));
                           for (auto v : c.vars)
                               add(v);
                           if (_scope.size() != c.vars.size())
                               throw InvalidProblem("precedence constraint repeats a variable");
                       },
                       [&](const ImpEqLeq & c) {
                           add(c.x);
                           add(c.z);
                       },
                       [&](const ImpEqEq & c) {
                           add(c.z);
                           add(c.x);
                       },
                       [&](const StrictLess & c) {
                           add(c.lhs);
                           add(c.rhs);
                       },
                       [&](const DisjunctionEq & c) {
                           if (c.vars.empty())
                               throw InvalidProblem("disjunction of equalities needs a non-empty scope");
                           for (auto v : c.vars)
                               add(v);
                       },
                       [&](const ParityLink & c) {
                           add(c.cond);
                           add(c.target);
                       },
                       [&](const AtLeastNValues & c) {
                           for (VarId v = 0; v < c.prefix; ++v)
                               add(v);
                       },
                       [&](const Conditional & c) {
                           if (! c.inner)
                               throw InvalidProblem("conditional constraint without an inner constraint");
                           add(c.cond);
                           for (auto v : c.inner->scope())
                               add(v);
                       }},
            _kind);

        if (auto b = get_if<ImpEqLeq>(); b && b->x == b->z)
            throw InvalidProblem("binary constraint on a single variable");
        if (auto b = get_if<ImpEqEq>(); b && b->x == b->z)
            throw InvalidProblem("binary constraint on a single variable");
        if (auto b = get_if<StrictLess>(); b && b->lhs == b->rhs)
            throw InvalidProblem("binary constraint on a single variable");
        if (auto b = get_if<ParityLink>(); b && b->cond == b->target)
            throw InvalidProblem("binary constraint on a single variable");
    }

    auto Constraint::name() const -> string
    {
        return std::visit(overloaded{
                              [](const LexLeqPermuted &) { return "lex_leq_permuted"; },
                              [](const Precedence &) { return "precedence"; },
                              [](const ImpEqLeq &) { return "imp_eq_leq"; },
                              [](const ImpEqEq &) { return "imp_eq_eq"; },
                              [](const StrictLess &) { return "strict_less"; },
                              [](const DisjunctionEq &) { return "disjunction_eq"; },
                              [](const ParityLink &) { return "parity_link"; },
                              [](const AtLeastNValues &) { return "at_least_n_values"; },
                              [](const Conditional &) { return "conditional"; }},
            _kind);
    }

    auto Constraint::fully_assigned(const Assignment & a) const -> bool
    {
        return std::all_of(_scope.begin(), _scope.end(), [&](VarId v) { return v < a.size() && a[v] != unassigned; });
    }

    auto Constraint::check(const Assignment & a) const -> bool
    {
        return std::visit(overloaded{
                              [&](const LexLeqPermuted & c) {
                                  for (auto v : c.vars) {
                                      auto x = value_at(a, v), y = c.perm(x);
                                      if (x != y)
                                          return x < y;
                                  }
                                  return true;
                              },
                              [&](const Precedence & c) {
                                  auto n = c.vars.size();
                                  auto first_use = [&](Value val, size_t if_unused) {
                                      for (size_t i = 0; i < n; ++i)
                                          if (value_at(a, c.vars[i]) == val)
                                              return i;
                                      return if_unused;
                                  };
                                  for (size_t j = 0; j < c.values.size(); ++j)
                                      for (size_t k = j + 1; k < c.values.size(); ++k)
                                          if (! (first_use(c.values[j], n) < first_use(c.values[k], n + 1)))
                                              return false;
                                  return true;
                              },
                              [&](const ImpEqLeq & c) { return value_at(a, c.x) != c.j || value_at(a, c.z) <= c.i; },
                              [&](const ImpEqEq & c) { return value_at(a, c.z) != c.i || value_at(a, c.x) == c.j; },
                              [&](const StrictLess & c) { return value_at(a, c.lhs) < value_at(a, c.rhs); },
                              [&](const DisjunctionEq & c) {
                                  return std::any_of(c.vars.begin(), c.vars.end(), [&](VarId v) { return value_at(a, v) == c.value; });
                              },
                              [&](const ParityLink & c) {
                                  return ! has_parity(value_at(a, c.cond), c.cond_parity) || has_parity(value_at(a, c.target), c.target_parity);
                              },
                              [&](const AtLeastNValues & c) {
                                  vector<Value> seen;
                                  for (VarId v = 0; v < c.prefix; ++v)
                                      seen.push_back(value_at(a, v));
                                  std::sort(seen.begin(), seen.end());
                                  auto distinct = static_cast<size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
                                  return distinct == c.distinct;
                              },
                              [&](const Conditional & c) {
                                  return ! has_parity(value_at(a, c.cond), c.parity) || c.inner->check(a);
                              }},
            _kind);
    }

    auto Constraint::to_string() const -> string
    {
        std::ostringstream s;
        std::visit(overloaded{
                       [&](const LexLeqPermuted & c) { s << "lex_leq_permuted" << c.perm.to_string() << '(' << var_list(c.vars) << ')'; },
                       [&](const Precedence & c) {
                           s << "precedence{";
                           for (size_t k = 0; k < c.values.size(); ++k)
                               s << (k ? "," : "") << c.values[k];
                           s << "}(" << var_list(c.vars) << ')';
                       },
                       [&](const ImpEqLeq & c) { s << 'X' << c.x + 1 << '=' << c.j << " -> X" << c.z + 1 << "<=" << c.i; },
                       [&](const ImpEqEq & c) { s << 'X' << c.z + 1 << '=' << c.i << " -> X" << c.x + 1 << '=' << c.j; },
                       [&](const StrictLess & c) { s << 'X' << c.lhs + 1 << " < X" << c.rhs + 1; },
                       [&](const DisjunctionEq & c) { s << "or_eq[" << c.value << "](" << var_list(c.vars) << ')'; },
                       [&](const ParityLink & c) {
                           s << parity_name(c.cond_parity) << "(X" << c.cond + 1 << ") -> " << parity_name(c.target_parity) << "(X" << c.target + 1 << ')';
                       },
                       [&](const AtLeastNValues & c) { s << "nvalues(" << c.prefix << ',' << c.distinct << ')'; },
                       [&](const Conditional & c) { s << parity_name(c.parity) << "(X" << c.cond + 1 << ") -> " << c.inner->to_string(); }},
            _kind);
        return s.str();
    }

    auto make_conditional(VarId cond, Parity parity, Constraint inner) -> Constraint
    {
        return Conditional{cond, parity, std::make_shared<const Constraint>(std::move(inner))};
    }
}
