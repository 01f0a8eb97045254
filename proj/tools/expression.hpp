#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stagger/complex.hpp"

namespace stagger::cli {

/// Bad input from the command line, a scenario file or an expression.
class UsageError : public std::runtime_error {
public:
    UsageError(std::string code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}
    const std::string& code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    std::string code_;
    std::string context_;
};

struct Expr {
    enum class Kind { kName, kCall, kCharacter, kIndexList, kInteger };
    Kind kind = Kind::kName;
    std::string name;          // identifier for names and calls
    std::vector<Int> numbers;  // character entries, indices, or the integer
    std::vector<Expr> args;
    std::size_t pos = 0;
};

/// Parses the object language. Throws UsageError("syntax") with the byte
/// offset of the problem in its context.
Expr parse_expression(std::string_view text);

using Value = std::variant<FreeComplex, CohomologyTable>;

/// Evaluates expressions against a setup and a table of named objects, whose
/// definitions are themselves expressions.
class Evaluator {
public:
    Evaluator(const TorusSetup& setup, std::map<std::string, std::string> objects)
        : setup_(setup), objects_(std::move(objects)) {}

    Value evaluate(std::string_view text);
    Value evaluate(const Expr& e);
    /// Like evaluate, but the result must be an object.
    FreeComplex object(std::string_view text);

private:
    FreeComplex as_object(const Expr& e);
    Character as_character(const Expr& e) const;
    Stratum as_stratum(const Expr& e) const;
    Int as_integer(const Expr& e) const;

    TorusSetup setup_;
    std::map<std::string, std::string> objects_;
    std::map<std::string, FreeComplex> cache_;
    std::set<std::string> active_;
};

}  // namespace stagger::cli
