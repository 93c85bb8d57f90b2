#include "capelli/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace capelli {

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> basis) : names_(std::move(basis)) {
    for (std::size_t g = 0; g < names_.size(); ++g)
        if (!index_.emplace(names_[g], g).second)
            throw std::invalid_argument("duplicate basis name: " + names_[g]);
    brackets_.resize(names_.size() * names_.size());
    roles_.assign(names_.size(), Role::other);
    cartan_.assign(names_.size(), 0);
}

int LieAlgebraSpec::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : int(it->second);
}

std::size_t LieAlgebraSpec::index(const std::string& name) const {
    int g = find(name);
    if (g < 0) throw std::invalid_argument("unknown basis element: " + name);
    return std::size_t(g);
}

namespace {

void add_into(SparseVector& vec, std::size_t w, const Coefficient& c) {
    auto it = std::lower_bound(vec.begin(), vec.end(), w,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != vec.end() && it->first == w) {
        it->second += c;
        if (it->second.is_zero()) vec.erase(it);
    } else if (!c.is_zero()) {
        vec.insert(it, {w, c});
    }
}

} // namespace

void LieAlgebraSpec::add_bracket(std::size_t u, std::size_t v, std::size_t w, const Coefficient& c) {
    if (u >= size() || v >= size() || w >= size()) throw std::out_of_range("bracket index");
    if (u == v) {
        if (!c.is_zero()) throw std::invalid_argument("[e, e] must vanish for " + names_[u]);
        return;
    }
    add_into(brackets_[u * size() + v], w, c);
    add_into(brackets_[v * size() + u], w, -c);
}

void LieAlgebraSpec::check_jacobi() const {
    std::size_t m = size();
    auto bracket_vec = [&](const SparseVector& x, std::size_t z) {
        SparseVector out;
        for (auto& [g, c] : x)
            for (auto& [w, d] : bracket(g, z)) add_into(out, w, c * d);
        return out;
    };
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z) {
                SparseVector total;
                for (auto& [w, c] : bracket_vec(bracket(x, y), z)) add_into(total, w, c);
                for (auto& [w, c] : bracket_vec(bracket(y, z), x)) add_into(total, w, c);
                for (auto& [w, c] : bracket_vec(bracket(z, x), y)) add_into(total, w, c);
                if (!total.empty())
                    throw std::invalid_argument("Jacobi identity fails for " + names_[x] + ", " +
                                                names_[y] + ", " + names_[z]);
            }
}

void LieAlgebraSpec::set_role(std::size_t g, Role role, int cartan_index) {
    roles_.at(g) = role;
    cartan_.at(g) = cartan_index;
}

LieAlgebraSpec LieAlgebraSpec::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    LieAlgebraSpec spec;
    bool have_basis = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "basis") {
            std::vector<std::string> names;
            for (std::string n; ls >> n;) names.push_back(n);
            spec = LieAlgebraSpec(std::move(names));
            have_basis = true;
        } else if (head == "bracket") {
            if (!have_basis) throw std::invalid_argument("bracket line before basis line");
            std::string u, v, w, c;
            if (!(ls >> u >> v >> w >> c)) throw std::invalid_argument("malformed line: " + line);
            spec.add_bracket(spec.index(u), spec.index(v), spec.index(w),
                             Coefficient(Rational::parse(c)));
        } else {
            throw std::invalid_argument("unknown directive: " + head);
        }
    }
    if (!have_basis) throw std::invalid_argument("missing basis line");
    spec.check_jacobi();
    return spec;
}

namespace {

struct GlIndex {
    std::size_t i, j;
};

std::vector<GlIndex> gl_order(std::size_t n) {
    std::vector<GlIndex> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i > j) out.push_back({i, j});
    for (std::size_t i = 0; i < n; ++i) out.push_back({i, i});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i < j) out.push_back({i, j});
    return out;
}

std::string gl_name(const std::string& prefix, GlIndex e) {
    if (e.i >= 9 || e.j >= 9) throw std::invalid_argument("gl_n with n > 9 is not supported");
    return prefix + std::to_string(e.i + 1) + std::to_string(e.j + 1);
}

// [E_ij, E_kl] = d_jk E_il - d_li E_kj over the copy starting at offset
void fill_gl(LieAlgebraSpec& spec, const std::vector<GlIndex>& order, std::size_t offset,
             const std::string& prefix) {
    std::size_t m = order.size();
    for (std::size_t a = 0; a < m; ++a) {
        auto [i, j] = order[a];
        auto role = i > j ? LieAlgebraSpec::Role::lowering
                          : (i == j ? LieAlgebraSpec::Role::cartan : LieAlgebraSpec::Role::raising);
        spec.set_role(offset + a, role, i == j ? int(i + 1) : 0);
        for (std::size_t b = a + 1; b < m; ++b) {
            auto [k, l] = order[b];
            if (j == k) spec.add_bracket(offset + a, offset + b, spec.index(gl_name(prefix, {i, l})), 1);
            if (l == i) spec.add_bracket(offset + a, offset + b, spec.index(gl_name(prefix, {k, j})), -1);
        }
    }
}

} // namespace

LieAlgebraSpec build_gln(std::size_t n) {
    if (n < 1) throw std::invalid_argument("gl_n needs n >= 1");
    auto order = gl_order(n);
    std::vector<std::string> names;
    for (auto e : order) names.push_back(gl_name("E", e));
    LieAlgebraSpec spec(names);
    fill_gl(spec, order, 0, "E");
    return spec;
}

LieAlgebraSpec build_doubled_gln(std::size_t n) {
    if (n < 1) throw std::invalid_argument("gl_n needs n >= 1");
    auto order = gl_order(n);
    std::vector<std::string> names;
    for (auto e : order) names.push_back(gl_name("E", e));
    for (auto e : order) names.push_back(gl_name("Eb", e));
    LieAlgebraSpec spec(names);
    fill_gl(spec, order, 0, "E");
    fill_gl(spec, order, order.size(), "Eb");
    std::vector<std::size_t> bar_map(2 * order.size());
    for (std::size_t a = 0; a < order.size(); ++a) {
        bar_map[a] = a + order.size();
        bar_map[a + order.size()] = a;
    }
    spec.set_bar(std::move(bar_map));
    return spec;
}

std::size_t PbwMonomialHash::operator()(const PbwMonomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m) {
        h ^= e;
        h *= 1099511628211ULL;
    }
    return std::size_t(h);
}

bool pbw_before(const PbwMonomial& a, const PbwMonomial& b) {
    int da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return a > b;
}

namespace {

using PbwAccum = std::unordered_map<PbwMonomial, Coefficient, PbwMonomialHash>;
using TermList = std::vector<std::pair<PbwMonomial, Coefficient>>;

void add_to(PbwAccum& acc, const PbwMonomial& m, const Coefficient& c) {
    auto [it, fresh] = acc.try_emplace(m, c);
    if (!fresh) it->second += c;
}

TermList finish(PbwAccum& acc) {
    TermList out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.emplace_back(m, std::move(c));
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return pbw_before(x.first, y.first); });
    return out;
}

} // namespace

PbwAlgebra::PbwAlgebra(LieAlgebraSpec spec) : spec_(std::move(spec)) {}

PbwAlgebraPtr make_pbw_algebra(LieAlgebraSpec spec) {
    return std::make_shared<const PbwAlgebra>(std::move(spec));
}

std::size_t PbwAlgebra::memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

const TermList& PbwAlgebra::times_generator(const PbwMonomial& a, std::size_t v) const {
    PbwMonomial key = a;
    key.push_back(std::uint8_t(v));
    {
        std::lock_guard lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return *it->second;
    }
    std::size_t w = a.size();
    for (std::size_t g = a.size(); g-- > 0;)
        if (a[g]) {
            w = g;
            break;
        }
    auto result = std::make_shared<TermList>();
    if (w == a.size() || w <= v) {
        PbwMonomial m = a;
        if (m[v] == 255) throw std::overflow_error("PBW exponent overflow");
        ++m[v];
        result->emplace_back(std::move(m), Coefficient(1));
    } else {
        PbwMonomial rest = a;
        --rest[w];
        PbwAccum acc;
        TermList first = times_generator(rest, v);
        for (auto& [m, c] : first)
            for (auto& [m2, c2] : times_generator(m, w)) add_to(acc, m2, c * c2);
        for (auto& [u, cu] : spec_.bracket(w, v)) {
            TermList part = times_generator(rest, u);
            for (auto& [m, c] : part) add_to(acc, m, cu * c);
        }
        *result = finish(acc);
    }
    std::lock_guard lock(mutex_);
    auto [it, fresh] = memo_.emplace(std::move(key), std::move(result));
    return *it->second;
}

PbwElement PbwElement::constant(PbwAlgebraPtr alg, const Coefficient& c) {
    PbwElement r(alg);
    if (!c.is_zero()) r.terms_.emplace_back(PbwMonomial(alg->spec().size(), 0), c);
    return r;
}

PbwElement PbwElement::generator(PbwAlgebraPtr alg, const std::string& name) {
    std::size_t g = alg->spec().index(name);
    return generator(std::move(alg), g);
}

PbwElement PbwElement::generator(PbwAlgebraPtr alg, std::size_t g) {
    PbwElement r(alg);
    PbwMonomial m(alg->spec().size(), 0);
    m.at(g) = 1;
    r.terms_.emplace_back(std::move(m), Coefficient(1));
    return r;
}

PbwElement PbwElement::from_terms(PbwAlgebraPtr alg, std::vector<Term> terms) {
    PbwAccum acc;
    for (auto& [m, c] : terms) add_to(acc, m, c);
    PbwElement r(std::move(alg));
    r.terms_ = finish(acc);
    return r;
}

PbwElement PbwElement::scaled(const Coefficient& c) const {
    if (c.is_zero()) return zero_like();
    PbwElement r = *this;
    for (auto& t : r.terms_) t.second = c * t.second;
    return r;
}

PbwElement PbwElement::operator-() const {
    PbwElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

PbwElement operator+(const PbwElement& a, const PbwElement& b) {
    if (a.terms_.empty()) return b.alg_ ? b : PbwElement(a.alg_);
    if (b.terms_.empty()) return a;
    if (a.alg_ != b.alg_) throw std::invalid_argument("PBW elements of different algebras");
    PbwElement r(a.alg_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && pbw_before(i->first, j->first))) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || pbw_before(j->first, i->first)) {
            r.terms_.push_back(*j++);
        } else {
            Coefficient c = i->second + j->second;
            if (!c.is_zero()) r.terms_.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

PbwElement operator-(const PbwElement& a, const PbwElement& b) { return a + (-b); }

PbwElement operator*(const PbwElement& a, const PbwElement& b) {
    PbwAlgebraPtr alg = a.alg_ ? a.alg_ : b.alg_;
    if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
        throw std::invalid_argument("PBW elements of different algebras");
    if (a.is_zero() || b.is_zero()) return PbwElement(alg);
    PbwAccum acc;
    for (auto& [mb, cb] : b.terms_) {
        // right factor as a word of generators in PBW order
        std::vector<std::size_t> word;
        for (std::size_t g = 0; g < mb.size(); ++g)
            for (int k = 0; k < mb[g]; ++k) word.push_back(g);
        for (auto& [ma, ca] : a.terms_) {
            TermList cur{{ma, ca * cb}};
            for (std::size_t g : word) {
                PbwAccum step;
                for (auto& [m, c] : cur)
                    for (auto& [m2, c2] : alg->times_generator(m, g)) add_to(step, m2, c * c2);
                cur = finish(step);
            }
            for (auto& [m, c] : cur) add_to(acc, m, c);
        }
    }
    PbwElement r(alg);
    r.terms_ = finish(acc);
    return r;
}

PbwElement PbwElement::coefficient_of(std::size_t param_index, unsigned e) const {
    std::vector<Term> out;
    for (auto& [m, c] : terms_) out.emplace_back(m, c.coefficient_of(param_index, e));
    return from_terms(alg_, std::move(out));
}

int PbwElement::degree_in(std::size_t param_index) const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.second.degree_in(param_index));
    return d;
}

std::string PbwElement::to_string() const {
    if (terms_.empty()) return "0";
    const auto& spec = alg_->spec();
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string mono;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (!m[g]) continue;
            if (!mono.empty()) mono += "*";
            mono += spec.name(g);
            if (m[g] > 1) mono += "^" + std::to_string(m[g]);
        }
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

PbwElement bar(const PbwElement& x) {
    const auto& spec = x.algebra()->spec();
    if (!spec.has_bar()) throw std::invalid_argument("algebra has no conjugation");
    PbwElement out(x.algebra());
    std::vector<PbwElement> parts;
    for (auto& [m, c] : x.terms()) {
        PbwElement t = PbwElement::constant(x.algebra(), bar(c));
        for (std::size_t g = 0; g < m.size(); ++g)
            for (int k = 0; k < m[g]; ++k) t = t * PbwElement::generator(x.algebra(), spec.bar_of(g));
        out = out + t;
    }
    return out;
}

Coefficient hc_eigenvalue(const PbwElement& x) {
    const auto& spec = x.algebra()->spec();
    Coefficient out;
    for (auto& [m, c] : x.terms()) {
        Coefficient term = c;
        bool keep = true;
        for (std::size_t g = 0; g < m.size() && keep; ++g) {
            if (!m[g]) continue;
            if (spec.role(g) != LieAlgebraSpec::Role::cartan) {
                keep = false;
                break;
            }
            term = term * Coefficient::parameter(param::lambda(spec.cartan_index(g))).pow(m[g]);
        }
        if (keep) out = out + term;
    }
    return out;
}

bool is_central(const PbwElement& x) {
    std::size_t m = x.algebra()->spec().size();
    for (std::size_t g = 0; g < m; ++g) {
        PbwElement e = PbwElement::generator(x.algebra(), g);
        if (!(x * e - e * x).is_zero()) return false;
    }
    return true;
}

} // namespace capelli
