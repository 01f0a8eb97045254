#include "expression.hpp"

#include <cctype>

#include "stagger/perversity.hpp"
#include "stagger/purity.hpp"

namespace stagger::cli {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw UsageError("syntax", msg, "position " + std::to_string(i_));
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    Int integer() {
        skip();
        const std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        const std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == digits) {
            i_ = start;
            fail("expected an integer");
        }
        try {
            return std::stoll(std::string(s_.substr(start, i_ - start)));
        } catch (const std::out_of_range&) {
            i_ = start;
            fail("integer out of range");
        }
    }

    std::vector<Int> int_list(char open, char close) {
        expect(open);
        std::vector<Int> out;
        if (peek(close)) {
            ++i_;
            return out;
        }
        while (true) {
            out.push_back(integer());
            if (peek(',')) {
                ++i_;
                continue;
            }
            expect(close);
            return out;
        }
    }

    Expr expr() {
        skip();
        Expr e;
        e.pos = i_;
        if (i_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[i_];
        if (c == '(') {
            e.kind = Expr::Kind::kCharacter;
            e.numbers = int_list('(', ')');
            return e;
        }
        if (c == '[') {
            e.kind = Expr::Kind::kIndexList;
            e.numbers = int_list('[', ']');
            return e;
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            e.kind = Expr::Kind::kInteger;
            e.numbers = {integer()};
            return e;
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("unexpected character");
        const std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        e.name = std::string(s_.substr(start, i_ - start));
        if (!peek('(')) {
            e.kind = Expr::Kind::kName;
            return e;
        }
        e.kind = Expr::Kind::kCall;
        ++i_;
        if (peek(')')) {
            ++i_;
            return e;
        }
        while (true) {
            e.args.push_back(expr());
            if (peek(',')) {
                ++i_;
                continue;
            }
            expect(')');
            return e;
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

std::string at(const Expr& e) { return "position " + std::to_string(e.pos); }

void arity(const Expr& e, std::size_t lo, std::size_t hi) {
    if (e.args.size() < lo || e.args.size() > hi)
        throw UsageError("arity", e.name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "+") +
                                      " argument(s)",
                         at(e));
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

Value Evaluator::evaluate(std::string_view text) { return evaluate(parse_expression(text)); }

FreeComplex Evaluator::object(std::string_view text) { return as_object(parse_expression(text)); }

Value Evaluator::evaluate(const Expr& e) {
    if (e.kind == Expr::Kind::kCall && e.name == "cohomology") {
        arity(e, 1, 1);
        return cohomology(as_object(e.args[0]));
    }
    return as_object(e);
}

Character Evaluator::as_character(const Expr& e) const {
    if (e.kind != Expr::Kind::kCharacter) throw UsageError("type", "expected a character such as (0,-1,0)", at(e));
    if (e.numbers.size() != static_cast<std::size_t>(setup_.n()))
        throw UsageError("malformed_character", "character must have " + std::to_string(setup_.n()) + " entries",
                         at(e));
    return Character(e.numbers);
}

Stratum Evaluator::as_stratum(const Expr& e) const {
    if (e.kind != Expr::Kind::kIndexList) throw UsageError("type", "expected an index list such as [2,3]", at(e));
    std::vector<int> idx;
    for (Int i : e.numbers) {
        if (i < 1 || i > setup_.n()) throw UsageError("malformed_index", "coordinate index out of range", at(e));
        idx.push_back(static_cast<int>(i));
    }
    return Stratum::from_indices(setup_.n(), idx);
}

Int Evaluator::as_integer(const Expr& e) const {
    if (e.kind != Expr::Kind::kInteger) throw UsageError("type", "expected an integer", at(e));
    return e.numbers.front();
}

FreeComplex Evaluator::as_object(const Expr& e) {
    const int n = setup_.n();
    switch (e.kind) {
        case Expr::Kind::kName: {
            if (auto it = cache_.find(e.name); it != cache_.end()) return it->second;
            auto def = objects_.find(e.name);
            if (def == objects_.end()) throw UsageError("unknown_name", "unknown object '" + e.name + "'", at(e));
            if (!active_.insert(e.name).second)
                throw UsageError("cyclic_definition", "object '" + e.name + "' refers to itself", at(e));
            FreeComplex value;
            try {
                value = as_object(parse_expression(def->second));
            } catch (const UsageError& err) {
                active_.erase(e.name);
                throw UsageError(err.code(), std::string(err.what()) + " in definition of '" + e.name + "'",
                                 err.context());
            }
            active_.erase(e.name);
            cache_.emplace(e.name, value);
            return value;
        }
        case Expr::Kind::kCall:
            break;
        default:
            throw UsageError("type", "expected an object expression", at(e));
    }

    const std::string& f = e.name;
    if (f == "free") {
        arity(e, 1, 64);
        GradedFree gens(n, {});
        for (const auto& a : e.args) gens.gens.push_back(as_character(a));
        return concentrated(Ring::ambient(n), gens, 0);
    }
    if (f == "skyscraper") {
        arity(e, 1, 1);
        return skyscraper(as_character(e.args[0]));
    }
    if (f == "stratum_sheaf") {
        arity(e, 1, 1);
        return stratum_sheaf(n, as_stratum(e.args[0]));
    }
    if (f == "koszul") {
        arity(e, 1, 1);
        return koszul(n, as_stratum(e.args[0]).indices());
    }
    if (f == "monomial_quotient") {
        arity(e, 1, 64);
        std::vector<Character> mons;
        for (std::size_t i = 1; i < e.args.size(); ++i) {
            auto m = as_character(e.args[i]);
            for (auto x : m.entries())
                if (x < 0) throw UsageError("malformed_character", "monomial exponents must be nonnegative", at(e.args[i]));
            mons.push_back(m);
        }
        return free_resolution(monomial_quotient(Ring::ambient(n), mons, as_character(e.args[0])), n);
    }
    if (f == "H") {
        arity(e, 1, 1);
        return ic_closed(setup_, as_character(e.args[0]), middle(setup_, DualKind::kStaggered));
    }
    if (f == "twist") {
        arity(e, 2, 2);
        return twist(as_object(e.args[0]), as_character(e.args[1]));
    }
    if (f == "shift") {
        arity(e, 2, 2);
        return shift(as_object(e.args[0]), static_cast<int>(as_integer(e.args[1])));
    }
    if (f == "dual") {
        arity(e, 1, 1);
        return dualize(setup_, as_object(e.args[0]));
    }
    if (f == "tensorL") {
        arity(e, 2, 2);
        return tensorL(as_object(e.args[0]), as_object(e.args[1]));
    }
    if (f == "rhom") {
        arity(e, 2, 2);
        return rhom(setup_, as_object(e.args[0]), as_object(e.args[1]));
    }
    if (f == "pullbackL") {
        arity(e, 2, 2);
        return pullback_L(as_object(e.args[0]), as_stratum(e.args[1]));
    }
    if (f == "shriek") {
        arity(e, 2, 2);
        return shriek_R(setup_, as_object(e.args[0]), as_stratum(e.args[1]));
    }
    if (f == "sum") {
        arity(e, 2, 64);
        FreeComplex out = as_object(e.args[0]);
        for (std::size_t i = 1; i < e.args.size(); ++i) out = direct_sum(out, as_object(e.args[i]));
        return out;
    }
    if (f == "push") {
        arity(e, 1, 1);
        return pushforward_closed(as_object(e.args[0]));
    }
    if (f == "minimize") {
        arity(e, 1, 1);
        return minimize(as_object(e.args[0]));
    }
    if (f == "cohomology") throw UsageError("type", "cohomology(...) is only allowed at the top level", at(e));
    throw UsageError("unknown_name", "unknown function '" + f + "'", at(e));
}

}  // namespace stagger::cli
