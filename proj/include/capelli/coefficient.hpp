#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "capelli/rational.hpp"

namespace capelli {

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(std::int64_t r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    GaussianRational inverse() const;
    std::string to_string() const;

    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

// Central parameters. The universe is fixed and sorted by name so that the
// exponent array order is the lexicographic order of the names.
namespace param {
inline constexpr std::size_t kCount = 27;
extern const std::array<std::string_view, kCount> kNames;
std::optional<std::size_t> lookup(std::string_view name);
std::size_t index(std::string_view name); // throws std::invalid_argument
std::size_t lambda(int i);                // lambda1..lambda9
std::size_t d(int i);                     // d1..d9
} // namespace param

struct ParamMonomial {
    std::array<std::uint8_t, param::kCount> exps{};

    int degree() const;
    bool is_one() const { return degree() == 0; }
    friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
    friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
    std::string to_string() const;
};

// true when a precedes b in the canonical (graded lex, descending) order
bool param_before(const ParamMonomial& a, const ParamMonomial& b);

class Coefficient {
public:
    using Term = std::pair<ParamMonomial, GaussianRational>;
    using Terms = boost::container::small_vector<Term, 1>;

    Coefficient() = default;
    Coefficient(std::int64_t v) : Coefficient(GaussianRational(v)) {}
    Coefficient(Rational v) : Coefficient(GaussianRational(std::move(v))) {}
    Coefficient(GaussianRational v);

    static Coefficient i() { return Coefficient(GaussianRational::i()); }
    static Coefficient parameter(std::string_view name);
    static Coefficient parameter(std::size_t index);
    static Coefficient from_terms(Terms terms); // canonicalizes

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // value of a constant coefficient; throws otherwise
    GaussianRational constant_value() const;
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool uses_parameter(std::size_t index) const;

    Coefficient zero_like() const { return {}; }
    Coefficient one_like() const { return Coefficient(1); }
    Coefficient scaled(const Coefficient& c) const { return c * *this; }

    Coefficient operator-() const;
    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    Coefficient& operator+=(const Coefficient& b) { return *this = *this + b; }
    Coefficient& operator-=(const Coefficient& b) { return *this = *this - b; }
    Coefficient& operator*=(const Coefficient& b) { return *this = *this * b; }
    friend bool operator==(const Coefficient&, const Coefficient&) = default;

    Coefficient pow(unsigned e) const;
    Coefficient substitute(const std::map<std::size_t, Coefficient>& bindings) const;
    Coefficient substitute(const std::map<std::string, Coefficient>& bindings) const;
    // coefficient of param^e viewed as a polynomial in that single parameter
    Coefficient coefficient_of(std::size_t index, unsigned e) const;
    int degree_in(std::size_t index) const;

    std::string to_string() const;
    // true when to_string() needs parentheses to be used as a factor
    bool needs_parens() const;
    // true when the rendering starts with a minus sign that can be pulled out
    bool is_negative_simple() const;

private:
    Terms terms_;
};

Coefficient bar(const Coefficient& c);

} // namespace capelli
