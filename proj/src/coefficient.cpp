#include "capelli/coefficient.hpp"

#include <algorithm>
#include <stdexcept>

namespace capelli {

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im.is_zero() && b.im.is_zero()) return GaussianRational(a.re * b.re);
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (im.is_zero()) return GaussianRational(re.inverse());
    Rational n = re * re + im * im;
    return {re / n, -im / n};
}

namespace {

std::string imag_part(const Rational& v) {
    if (v.is_one()) return "i";
    if (v == Rational(-1)) return "-i";
    if (v.is_integer()) return v.to_string() + "i";
    return v.to_string() + "*i";
}

} // namespace

std::string GaussianRational::to_string() const {
    if (im.is_zero()) return re.to_string();
    if (re.is_zero()) return imag_part(im);
    std::string s = re.to_string();
    if (im.sign() < 0) return s + "-" + imag_part(-im);
    return s + "+" + imag_part(im);
}

namespace param {

const std::array<std::string_view, kCount> kNames = {
    "a",       "b",       "c",       "d",       "d1",      "d2",      "d3",
    "d4",      "d5",      "d6",      "d7",      "d8",      "d9",      "h",
    "k",       "lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6",
    "lambda7", "lambda8", "lambda9", "s",       "t",       "u"};

std::optional<std::size_t> lookup(std::string_view name) {
    auto it = std::lower_bound(kNames.begin(), kNames.end(), name);
    if (it == kNames.end() || *it != name) return std::nullopt;
    return std::size_t(it - kNames.begin());
}

std::size_t index(std::string_view name) {
    auto r = lookup(name);
    if (!r) throw std::invalid_argument("unknown parameter: " + std::string(name));
    return *r;
}

std::size_t lambda(int i) {
    if (i < 1 || i > 9) throw std::out_of_range("lambda index");
    return index("lambda" + std::to_string(i));
}

std::size_t d(int i) {
    if (i < 1 || i > 9) throw std::out_of_range("d index");
    return index("d" + std::to_string(i));
}

} // namespace param

int ParamMonomial::degree() const {
    int s = 0;
    for (auto e : exps) s += e;
    return s;
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r;
    for (std::size_t k = 0; k < param::kCount; ++k) {
        unsigned v = unsigned(a.exps[k]) + b.exps[k];
        if (v > 255) throw std::overflow_error("parameter exponent overflow");
        r.exps[k] = std::uint8_t(v);
    }
    return r;
}

std::string ParamMonomial::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < param::kCount; ++k) {
        if (!exps[k]) continue;
        if (!out.empty()) out += "*";
        out += param::kNames[k];
        if (exps[k] > 1) out += "^" + std::to_string(exps[k]);
    }
    return out;
}

bool param_before(const ParamMonomial& a, const ParamMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
}

Coefficient::Coefficient(GaussianRational v) {
    if (!v.is_zero()) terms_.emplace_back(ParamMonomial{}, std::move(v));
}

Coefficient Coefficient::parameter(std::string_view name) { return parameter(param::index(name)); }

Coefficient Coefficient::parameter(std::size_t index) {
    Coefficient c;
    ParamMonomial m;
    m.exps.at(index) = 1;
    c.terms_.emplace_back(m, GaussianRational(1));
    return c;
}

Coefficient Coefficient::from_terms(Terms terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return param_before(x.first, y.first); });
    Coefficient c;
    for (auto& t : terms) {
        if (!c.terms_.empty() && c.terms_.back().first == t.first) {
            c.terms_.back().second = c.terms_.back().second + t.second;
            if (c.terms_.back().second.is_zero()) c.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            c.terms_.push_back(std::move(t));
        }
    }
    return c;
}

bool Coefficient::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one();
}

bool Coefficient::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

GaussianRational Coefficient::constant_value() const {
    if (!is_constant()) throw std::domain_error("coefficient is not constant: " + to_string());
    return terms_.empty() ? GaussianRational() : terms_[0].second;
}

bool Coefficient::uses_parameter(std::size_t index) const {
    for (auto& t : terms_)
        if (t.first.exps[index]) return true;
    return false;
}

Coefficient Coefficient::operator-() const {
    Coefficient c = *this;
    for (auto& t : c.terms_) t.second = -t.second;
    return c;
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    if (a.terms_.empty()) return b;
    if (b.terms_.empty()) return a;
    Coefficient r;
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && param_before(i->first, j->first))) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || param_before(j->first, i->first)) {
            r.terms_.push_back(*j++);
        } else {
            GaussianRational v = i->second + j->second;
            if (!v.is_zero()) r.terms_.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        Coefficient r;
        r.terms_.emplace_back(a.terms_[0].first * b.terms_[0].first,
                              a.terms_[0].second * b.terms_[0].second);
        return r;
    }
    Coefficient::Terms out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (auto& x : a.terms_)
        for (auto& y : b.terms_) out.emplace_back(x.first * y.first, x.second * y.second);
    return Coefficient::from_terms(std::move(out));
}

Coefficient Coefficient::pow(unsigned e) const {
    Coefficient r(1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Coefficient Coefficient::substitute(const std::map<std::size_t, Coefficient>& bindings) const {
    Coefficient r;
    for (auto& [m, v] : terms_) {
        Coefficient term(v);
        ParamMonomial rest = m;
        for (auto& [idx, val] : bindings) {
            if (!m.exps.at(idx)) continue;
            term = term * val.pow(m.exps[idx]);
            rest.exps[idx] = 0;
        }
        Coefficient restc;
        restc.terms_.emplace_back(rest, GaussianRational(1));
        r = r + term * restc;
    }
    return r;
}

Coefficient Coefficient::substitute(const std::map<std::string, Coefficient>& bindings) const {
    std::map<std::size_t, Coefficient> b;
    for (auto& [name, v] : bindings) b.emplace(param::index(name), v);
    return substitute(b);
}

Coefficient Coefficient::coefficient_of(std::size_t index, unsigned e) const {
    Terms out;
    for (auto& [m, v] : terms_) {
        if (m.exps.at(index) != e) continue;
        ParamMonomial rest = m;
        rest.exps[index] = 0;
        out.emplace_back(rest, v);
    }
    return from_terms(std::move(out));
}

int Coefficient::degree_in(std::size_t index) const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, int(t.first.exps.at(index)));
    return d;
}

namespace {

// sign-stripped rendering of one term; returns true if the term was negative
bool render_term(const ParamMonomial& m, const GaussianRational& v, std::string& out) {
    bool neg = false;
    GaussianRational c = v;
    if ((c.im.is_zero() && c.re.sign() < 0) || (c.re.is_zero() && c.im.sign() < 0)) {
        neg = true;
        c = -c;
    }
    std::string mono = m.to_string();
    if (mono.empty()) {
        out = c.to_string();
    } else if (c.is_one()) {
        out = mono;
    } else if (!c.re.is_zero() && !c.im.is_zero()) {
        out = "(" + c.to_string() + ")*" + mono;
    } else {
        out = c.to_string() + "*" + mono;
    }
    return neg;
}

} // namespace

std::string Coefficient::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, v] : terms_) {
        std::string t;
        bool neg = render_term(m, v, t);
        if (!first && m.is_one() && !v.re.is_zero() && !v.im.is_zero()) t = "(" + t + ")";
        if (first) {
            out = neg ? "-" + t : t;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += t;
        }
    }
    return out;
}

bool Coefficient::needs_parens() const {
    if (terms_.size() > 1) return true;
    if (terms_.size() == 1) {
        auto& v = terms_[0].second;
        return !v.re.is_zero() && !v.im.is_zero();
    }
    return false;
}

bool Coefficient::is_negative_simple() const {
    if (terms_.size() != 1) return false;
    auto& v = terms_[0].second;
    return (v.im.is_zero() && v.re.sign() < 0) || (v.re.is_zero() && v.im.sign() < 0);
}

Coefficient bar(const Coefficient& c) {
    Coefficient::Terms t = c.terms();
    for (auto& x : t) x.second = x.second.conj();
    return Coefficient::from_terms(std::move(t));
}

} // namespace capelli
