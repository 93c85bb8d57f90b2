#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "capelli/matrix.hpp"
#include "capelli/pbw.hpp"
#include "capelli/ring.hpp"
#include "capelli/swapalg.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Identifiers in an expression, in order of first appearance (excluding "i").
std::vector<std::string> identifiers(std::string_view text);

// Coefficient expression: integers, fractions, i, parameters, + - * / ^ and parentheses.
Coefficient parse_coefficient(std::string_view text);

namespace detail {

template <Ring R>
class ExpressionParser {
public:
    using Atom = std::function<std::optional<R>(const std::string&)>;

    ExpressionParser(std::string_view text, const R& proto, Atom atom)
        : text_(text), proto_(proto.zero_like()), atom_(std::move(atom)) {}

    R parse() {
        Value v = expression();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v.element(proto_);
    }

private:
    // scalars are kept apart so that division by a constant stays possible
    struct Value {
        bool scalar = true;
        Coefficient c;
        R r;
        R element(const R& proto) const { return scalar ? constant_like(proto, c) : r; }
    };

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value add(const Value& a, const Value& b, bool subtract) {
        if (a.scalar && b.scalar) return {true, subtract ? a.c - b.c : a.c + b.c, proto_};
        R x = a.element(proto_), y = b.element(proto_);
        return {false, {}, subtract ? x - y : x + y};
    }

    Value mul(const Value& a, const Value& b) {
        if (a.scalar && b.scalar) return {true, a.c * b.c, proto_};
        if (a.scalar) return {false, {}, b.r.scaled(a.c)};
        if (b.scalar) return {false, {}, a.r.scaled(b.c)};
        return {false, {}, a.r * b.r};
    }

    Value expression() {
        skip();
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Value v = term();
        if (negate) v = mul(Value{true, Coefficient(-1), proto_}, v);
        for (;;) {
            if (accept('+')) v = add(v, term(), false);
            else if (accept('-')) v = add(v, term(), true);
            else return v;
        }
    }

    Value term() {
        Value v = power();
        for (;;) {
            if (accept('*')) {
                v = mul(v, power());
            } else if (accept('/')) {
                Value d = power();
                if (!d.scalar || !d.c.is_constant() || d.c.is_zero()) fail("division by a non-constant");
                v = mul(v, Value{true, Coefficient(d.c.constant_value().inverse()), proto_});
            } else {
                return v;
            }
        }
    }

    Value power() {
        Value base = primary();
        if (!accept('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        unsigned e = unsigned(std::stoul(std::string(text_.substr(start, pos_ - start))));
        Value out{true, Coefficient(1), proto_};
        for (unsigned k = 0; k < e; ++k) out = mul(out, base);
        return out;
    }

    Value primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expression();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return mul(Value{true, Coefficient(-1), proto_}, power());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Coefficient value(Rational::parse(std::string(text_.substr(start, pos_ - start))));
            // imaginary literal such as 2i
            if (pos_ < text_.size() && text_[pos_] == 'i' &&
                (pos_ + 1 == text_.size() ||
                 !(std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '_'))) {
                ++pos_;
                value *= Coefficient::i();
            }
            return {true, value, proto_};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (atom_) {
                if (auto r = atom_(name)) return {false, {}, *r};
            }
            if (name == "i") return {true, Coefficient::i(), proto_};
            if (param::lookup(name)) return {true, Coefficient::parameter(name), proto_};
            fail("unknown identifier " + name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    R proto_;
    Atom atom_;
};

} // namespace detail

// Parses an element of the ring of proto. atom resolves ring identifiers;
// unresolved names fall back to i and the central parameters.
template <Ring R>
R parse_element(std::string_view text, const R& proto,
                const std::function<std::optional<R>(const std::string&)>& atom) {
    return detail::ExpressionParser<R>(text, proto, atom).parse();
}

// Matrix fixture: rows separated by ';', entries by ','.
template <Ring R>
RingMatrix<R> parse_matrix(std::string_view text, const R& proto,
                           const std::function<std::optional<R>(const std::string&)>& atom) {
    std::vector<std::vector<R>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view row = text.substr(start, end - start);
        std::vector<R> entries;
        std::size_t s = 0;
        while (s <= row.size()) {
            std::size_t e = row.find(',', s);
            if (e == std::string_view::npos) e = row.size();
            entries.push_back(parse_element(row.substr(s, e - s), proto, atom));
            s = e + 1;
        }
        rows.push_back(std::move(entries));
        start = end + 1;
    }
    for (auto& r : rows)
        if (r.size() != rows.front().size()) throw ParseError("ragged matrix fixture");
    RingMatrix<R> m(rows.size(), rows.front().size(), proto);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

// Weyl identifiers: "d" followed by a letter is the derivative of the rest;
// d, d1..d9 and the other central parameter names stay parameters.
GeneratorSetPtr weyl_generators_for(std::string_view text);
std::function<std::optional<WeylElement>(const std::string&)> weyl_atom(const GeneratorSetPtr& gs);
WeylElement parse_weyl(std::string_view text, const GeneratorSetPtr& gs);
WeylElement parse_weyl(std::string_view text);

std::function<std::optional<PbwElement>(const std::string&)> pbw_atom(const PbwAlgebraPtr& alg);
PbwElement parse_pbw(std::string_view text, const PbwAlgebraPtr& alg);

std::function<std::optional<SwapElement>(const std::string&)> swap_atom(const SwapTablePtr& table);
SwapElement parse_swap(std::string_view text, const SwapTablePtr& table);

} // namespace capelli
