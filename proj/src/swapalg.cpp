#include "capelli/swapalg.hpp"

#include <algorithm>

namespace capelli {

bool word_before(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

SwapTable::SwapTable(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.size() > 255) throw std::invalid_argument("too many letters");
    for (std::size_t a = 0; a < letters_.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (letters_[a] == letters_[b]) throw std::invalid_argument("duplicate letter " + letters_[a]);
    policy_.assign(size() * size(), SwapPolicy::none);
    square_zero_.assign(size(), false);
    barred_.assign(size(), false);
    bar_.assign(size(), -1);
}

std::shared_ptr<const SwapTable> SwapTable::grassmann(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= m; ++k) names.push_back("psi" + std::to_string(k));
    auto t = std::make_shared<SwapTable>(names);
    for (std::size_t a = 0; a < m; ++a) {
        t->set_square_zero(a);
        for (std::size_t b = 0; b < a; ++b) t->set_policy(a, b, SwapPolicy::anticommute);
    }
    t->check_confluence();
    return t;
}

int SwapTable::find(const std::string& name) const {
    auto it = std::find(letters_.begin(), letters_.end(), name);
    return it == letters_.end() ? -1 : int(it - letters_.begin());
}

std::size_t SwapTable::index(const std::string& name) const {
    int k = find(name);
    if (k < 0) throw std::invalid_argument("unknown letter: " + name);
    return std::size_t(k);
}

void SwapTable::set_policy(std::size_t a, std::size_t b, SwapPolicy p) {
    if (a == b) throw std::invalid_argument("policy of a letter with itself");
    policy_.at(a * size() + b) = p;
    policy_.at(b * size() + a) = p;
}

void SwapTable::set_square_zero(std::size_t a, bool zero) { square_zero_.at(a) = zero; }

void SwapTable::set_rule(std::size_t a, std::size_t b, WordSum rhs) {
    if (a >= size() || b >= size()) throw std::out_of_range("rule letter");
    rules_[{a, b}] = std::move(rhs);
}

void SwapTable::set_bar_pair(std::size_t a, std::size_t b) {
    bar_.at(a) = int(b);
    bar_.at(b) = int(a);
}

bool SwapTable::has_bar() const {
    return std::all_of(bar_.begin(), bar_.end(), [](int v) { return v >= 0; });
}

const WordSum* SwapTable::rule(std::size_t a, std::size_t b, WordSum& scratch) const {
    auto it = rules_.find({a, b});
    if (it != rules_.end()) return &it->second;
    if (a == b) {
        if (!square_zero_[a]) return nullptr;
        scratch.clear();
        return &scratch;
    }
    if (a < b) return nullptr;
    SwapPolicy p = policy(a, b);
    if (p == SwapPolicy::none) return nullptr;
    scratch.assign(1, {Word{std::uint8_t(b), std::uint8_t(a)},
                       Coefficient(p == SwapPolicy::commute ? 1 : -1)});
    return &scratch;
}

void SwapTable::rewrite(const Word& word, const Coefficient& c, std::size_t& budget,
                        WordMap& out) const {
    if (budget-- == 0) throw NonConfluentTable("rewriting does not terminate");
    WordSum scratch;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        const WordSum* rhs = rule(word[i], word[i + 1], scratch);
        if (!rhs) continue;
        WordSum local = *rhs;
        for (auto& [w, k] : local) {
            Word next(word.begin(), word.begin() + std::ptrdiff_t(i));
            next.insert(next.end(), w.begin(), w.end());
            next.insert(next.end(), word.begin() + std::ptrdiff_t(i + 2), word.end());
            rewrite(next, c * k, budget, out);
        }
        return;
    }
    auto [it, fresh] = out.try_emplace(word, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

void SwapTable::normalize_into(const Word& word, const Coefficient& c, WordMap& out) const {
    std::size_t budget = 1000000;
    rewrite(word, c, budget, out);
}

WordSum SwapTable::normalize(const Word& word) const {
    WordMap out;
    normalize_into(word, Coefficient(1), out);
    return WordSum(out.begin(), out.end());
}

void SwapTable::check_confluence() const {
    WordSum s1, s2;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b) {
            const WordSum* r1 = rule(a, b, s1);
            if (!r1) continue;
            WordSum left_rule = *r1;
            for (std::size_t c = 0; c < size(); ++c) {
                const WordSum* r2 = rule(b, c, s2);
                if (!r2) continue;
                WordMap left, right;
                for (auto& [w, k] : left_rule) {
                    Word next = w;
                    next.push_back(std::uint8_t(c));
                    normalize_into(next, k, left);
                }
                for (auto& [w, k] : *r2) {
                    Word next{std::uint8_t(a)};
                    next.insert(next.end(), w.begin(), w.end());
                    normalize_into(next, k, right);
                }
                if (left != right)
                    throw NonConfluentTable("rewrite rules are not confluent on " + letters_[a] +
                                            "*" + letters_[b] + "*" + letters_[c]);
            }
        }
}

std::string SwapTable::render(const Word& w) const {
    std::string out;
    for (auto l : w) {
        if (!out.empty()) out += "*";
        out += letters_.at(l);
    }
    return out;
}

SwapElement SwapElement::constant(SwapTablePtr table, const Coefficient& c) {
    return word(std::move(table), Word{}, c);
}

SwapElement SwapElement::letter(SwapTablePtr table, const std::string& name) {
    std::size_t k = table->index(name);
    return letter(std::move(table), k);
}

SwapElement SwapElement::letter(SwapTablePtr table, std::size_t k) {
    if (k >= table->size()) throw std::out_of_range("letter index");
    return word(std::move(table), Word{std::uint8_t(k)});
}

SwapElement SwapElement::word(SwapTablePtr table, const Word& w, const Coefficient& c) {
    SwapElement r(table);
    if (c.is_zero()) return r;
    WordMap out;
    table->normalize_into(w, c, out);
    r.terms_.assign(out.begin(), out.end());
    return r;
}

SwapElement SwapElement::scaled(const Coefficient& c) const {
    if (c.is_zero()) return zero_like();
    SwapElement r = *this;
    for (auto& t : r.terms_) t.second = c * t.second;
    return r;
}

SwapElement SwapElement::operator-() const {
    SwapElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

SwapElement operator+(const SwapElement& a, const SwapElement& b) {
    if (a.terms_.empty()) return b.table_ ? b : SwapElement(a.table_);
    if (b.terms_.empty()) return a;
    if (a.table_ != b.table_) throw std::invalid_argument("swap elements over different tables");
    WordMap out(a.terms_.begin(), a.terms_.end());
    for (auto& [w, c] : b.terms_) {
        auto [it, fresh] = out.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    SwapElement r(a.table_);
    r.terms_.assign(out.begin(), out.end());
    return r;
}

SwapElement operator-(const SwapElement& a, const SwapElement& b) { return a + (-b); }

SwapElement operator*(const SwapElement& a, const SwapElement& b) {
    SwapTablePtr t = a.table_ ? a.table_ : b.table_;
    if (a.table_ && b.table_ && a.table_ != b.table_)
        throw std::invalid_argument("swap elements over different tables");
    SwapElement r(t);
    if (a.is_zero() || b.is_zero()) return r;
    WordMap out;
    for (auto& [wa, ca] : a.terms_)
        for (auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            t->normalize_into(w, ca * cb, out);
        }
    r.terms_.assign(out.begin(), out.end());
    return r;
}

SwapElement SwapElement::substitute(const std::map<std::string, Coefficient>& bindings) const {
    SwapElement r(table_);
    for (auto& [w, c] : terms_) r = r + word(table_, w, c.substitute(bindings));
    return r;
}

std::string SwapElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [w, c] : terms_) {
        std::string mono = table_->render(w);
        std::string term;
        bool neg = false;
        if (mono.empty()) {
            neg = c.is_negative_simple();
            term = neg ? (-c).to_string() : c.to_string();
            if (c.terms().size() > 1 && !first) term = "(" + term + ")";
        } else if (c.is_one()) {
            term = mono;
        } else if (c.is_negative_simple()) {
            neg = true;
            Coefficient p = -c;
            term = p.is_one() ? mono : p.to_string() + "*" + mono;
        } else if (c.needs_parens()) {
            term = "(" + c.to_string() + ")*" + mono;
        } else {
            term = c.to_string() + "*" + mono;
        }
        if (first) {
            out = neg ? "-" + term : term;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

SwapElement bar(const SwapElement& x) {
    const auto& t = x.table();
    if (!t->has_bar()) throw std::invalid_argument("letter table has no conjugation");
    SwapElement r(t);
    for (auto& [w, c] : x.terms()) {
        Word m;
        for (auto l : w) m.push_back(std::uint8_t(t->bar_of(l)));
        r = r + SwapElement::word(t, m, bar(c));
    }
    return r;
}

SwapElement bigrade_project(const SwapElement& x, std::size_t hol, std::size_t antihol) {
    SwapElement r(x.table());
    for (auto& [w, c] : x.terms()) {
        std::size_t nb = 0;
        for (auto l : w) nb += x.table()->barred(l);
        if (nb == antihol && w.size() - nb == hol) r = r + SwapElement::word(x.table(), w, c);
    }
    return r;
}

std::vector<std::pair<std::size_t, std::size_t>> bidegrees(const SwapElement& x) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto& [w, c] : x.terms()) {
        std::size_t nb = 0;
        for (auto l : w) nb += x.table()->barred(l);
        std::pair<std::size_t, std::size_t> d{w.size() - nb, nb};
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::shared_ptr<SwapTable> psi_phi_base() {
    auto t = std::make_shared<SwapTable>(std::vector<std::string>{"psi", "phi", "psi_bar", "phi_bar"});
    t->set_barred(2, true);
    t->set_barred(3, true);
    t->set_bar_pair(0, 2);
    t->set_bar_pair(1, 3);
    for (std::size_t a : {0, 1})
        for (std::size_t b : {2, 3}) t->set_policy(a, b, SwapPolicy::anticommute);
    return t;
}

} // namespace

SwapTablePtr psi_phi_table() {
    auto t = psi_phi_base();
    t->check_confluence();
    return t;
}

SwapTablePtr psi_phi_nilpotent_table() {
    auto t = psi_phi_base();
    for (std::uint8_t off : {0, 2}) {
        std::uint8_t psi = off, phi = std::uint8_t(off + 1);
        t->set_rule(psi, psi, {{Word{psi, phi}, Coefficient(1)}});
        t->set_rule(phi, psi, {{Word{psi, phi}, Coefficient(-1)}});
        t->set_rule(phi, phi, {});
    }
    t->check_confluence();
    return t;
}

SwapTablePtr column_commuting_table(std::size_t n) {
    if (n < 1 || n > 9) throw std::invalid_argument("column_commuting_table size");
    std::vector<std::string> names;
    for (const char* prefix : {"M", "Mb"})
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                names.push_back(prefix + std::to_string(i + 1) + std::to_string(j + 1));
    auto t = std::make_shared<SwapTable>(names);
    std::size_t half = n * n;
    for (std::size_t a = 0; a < 2 * half; ++a) {
        t->set_barred(a, a >= half);
        if (a < half) t->set_bar_pair(a, a + half);
        for (std::size_t b = 0; b < a; ++b) {
            bool same_copy = (a >= half) == (b >= half);
            bool same_column = (a % half) / n == (b % half) / n;
            if (!same_copy || same_column) t->set_policy(a, b, SwapPolicy::commute);
        }
    }
    t->check_confluence();
    return t;
}

} // namespace capelli
