#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "jforge/extcalc/graded.hpp"

namespace jforge {

// Result of parsing: a scalar, a homogeneous form, or a homogeneous multivector.
using Expr = std::variant<ScalarField, DifferentialForm, MultiVectorField>;

// Names other than coordinates that an expression may reference.
using SymbolTable = std::map<std::string, Expr, std::less<>>;

// Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' unary)?            right associative
//   atom  := INTEGER | NAME | 'd' NAME | '@' NAME | '(' expr ')'
// '^' is an integer power between scalars and a wedge otherwise.
Expr parse_expression(std::string_view text, const ChartPtr& chart, const SymbolTable* symbols = nullptr);

ScalarField parse_scalar(std::string_view text, const ChartPtr& chart, const SymbolTable* symbols = nullptr);
// A literal 0 carries no degree; zero_degree supplies it.
DifferentialForm parse_form(std::string_view text, const ChartPtr& chart, const SymbolTable* symbols = nullptr,
                            int zero_degree = 0);
MultiVectorField parse_multivector(std::string_view text, const ChartPtr& chart,
                                   const SymbolTable* symbols = nullptr, int zero_degree = 0);

std::string serialize(const ScalarField& f);
std::string serialize(const DifferentialForm& w);
std::string serialize(const MultiVectorField& A);
std::string serialize(const Expr& e);

std::ostream& operator<<(std::ostream& os, const DifferentialForm& w);
std::ostream& operator<<(std::ostream& os, const MultiVectorField& A);

}  // namespace jforge
