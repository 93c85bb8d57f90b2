#include "capelli/weyl.hpp"

#include <algorithm>
#include <functional>

#include <absl/container/flat_hash_map.h>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace capelli {

std::shared_ptr<const GeneratorSet> GeneratorSet::make(std::vector<std::string> names,
                                                       const std::string& laurent) {
    auto gs = std::make_shared<GeneratorSet>();
    for (std::size_t g = 0; g < names.size(); ++g) {
        if (names[g].empty()) throw std::invalid_argument("empty generator name");
        if (!gs->index_.emplace(names[g], g).second)
            throw std::invalid_argument("duplicate generator name: " + names[g]);
    }
    gs->names_ = std::move(names);
    if (!laurent.empty()) gs->laurent_ = int(gs->index(laurent));
    return gs;
}

int GeneratorSet::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : int(it->second);
}

std::size_t GeneratorSet::index(const std::string& name) const {
    int g = find(name);
    if (g < 0) throw std::invalid_argument("unknown generator: " + name);
    return std::size_t(g);
}

int WeylMonomial::degree() const {
    int s = 0;
    for (auto e : exps) s += e;
    return s;
}

bool WeylMonomial::is_polynomial(std::size_t g) const {
    for (std::size_t k = g; k < 2 * g; ++k)
        if (exps[k]) return false;
    return true;
}

std::size_t WeylMonomialHash::operator()(const WeylMonomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exps) {
        h ^= std::uint8_t(e);
        h *= 1099511628211ULL;
    }
    return std::size_t(h);
}

bool weyl_before(const WeylMonomial& a, const WeylMonomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    return a.exps > b.exps;
}

namespace {

using Accum = absl::flat_hash_map<WeylMonomial, Coefficient, WeylMonomialHash>;

std::vector<WeylElement::Term> finish(Accum& acc) {
    std::vector<WeylElement::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.emplace_back(m, std::move(c));
    for (auto& t : out) t.first.refresh();
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return weyl_before(x.first, y.first); });
    return out;
}

void add_to(Accum& acc, const WeylMonomial& m, Coefficient c) {
    auto [it, fresh] = acc.try_emplace(m, std::move(c));
    if (!fresh) it->second += c;
}

std::int8_t narrow(int v) {
    if (v < -128 || v > 127) throw std::overflow_error("Weyl exponent out of range");
    return std::int8_t(v);
}

std::int64_t binom(int n, int k) {
    std::int64_t r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

Rational falling(int c, int k) {
    Rational r(1);
    for (int j = 0; j < k; ++j) r *= Rational(c - j);
    return r;
}

// Accumulates (x^a d^b)(x^c d^e) * coef into acc.
void mul_monomials(const WeylMonomial& m1, const WeylMonomial& m2, const Coefficient& coef,
                   std::size_t G, int laurent, Accum& acc) {
    struct Slot {
        std::size_t g;
        int kmax;
    };
    boost::container::small_vector<Slot, 16> all;
    WeylMonomial base;
    base.exps.resize(2 * G);
    for (std::size_t g = 0; g < G; ++g) {
        int b = m1.exps[G + g], c = m2.exps[g];
        base.exps[g] = narrow(m1.exps[g] + c);
        base.exps[G + g] = narrow(b + m2.exps[G + g]);
        if (b == 0 || c == 0) continue;
        int kmax = (int(g) == laurent && c < 0) ? b : std::min(b, c);
        all.push_back({g, kmax});
    }
    if (all.empty()) {
        add_to(acc, base, coef);
        return;
    }
    boost::container::small_vector<int, 16> ks(all.size(), 0);
    while (true) {
        WeylMonomial m = base;
        Rational factor(1);
        for (std::size_t s = 0; s < all.size(); ++s) {
            int k = ks[s];
            if (!k) continue;
            std::size_t g = all[s].g;
            int b = m1.exps[G + g], c = m2.exps[g];
            factor *= Rational(binom(b, k)) * falling(c, k);
            m.exps[g] = narrow(m.exps[g] - k);
            m.exps[G + g] = narrow(m.exps[G + g] - k);
        }
        add_to(acc, m, factor.is_one() ? coef : coef.scaled(Coefficient(factor)));
        std::size_t s = 0;
        while (s < all.size() && ks[s] == all[s].kmax) ks[s++] = 0;
        if (s == all.size()) break;
        ++ks[s];
    }
}

void mul_range(const WeylElement& a, const WeylElement& b, std::size_t lo, std::size_t hi,
               Accum& acc, const Coefficient& scale = Coefficient(1)) {
    std::size_t G = a.generators()->size();
    int laurent = a.generators()->laurent();
    bool unit = scale.is_one();
    for (std::size_t i = lo; i < hi; ++i) {
        auto& [m1, c1] = a.terms()[i];
        Coefficient c1s = unit ? c1 : scale * c1;
        for (auto& [m2, c2] : b.terms()) mul_monomials(m1, m2, c1s * c2, G, laurent, acc);
    }
}

void check_same(const WeylElement& a, const WeylElement& b) {
    if (a.generators() != b.generators() &&
        !(a.generators() && b.generators() && a.generators()->names() == b.generators()->names()))
        throw std::invalid_argument("Weyl elements over different generator sets");
}

} // namespace

struct WeylAccumulator::Impl {
    Accum acc;
};

WeylAccumulator::WeylAccumulator(GeneratorSetPtr gs)
    : gs_(std::move(gs)), impl_(std::make_unique<Impl>()) {}
WeylAccumulator::~WeylAccumulator() = default;
WeylAccumulator::WeylAccumulator(WeylAccumulator&&) noexcept = default;
WeylAccumulator& WeylAccumulator::operator=(WeylAccumulator&&) noexcept = default;

void WeylAccumulator::add(const WeylElement& x, const Coefficient& scale) {
    if (x.is_zero()) return;
    check_same(WeylElement(gs_), x);
    bool unit = scale.is_one();
    for (auto& [m, c] : x.terms()) add_to(impl_->acc, m, unit ? c : scale * c);
}

void WeylAccumulator::add_product(const WeylElement& a, const WeylElement& b,
                                  const Coefficient& scale) {
    if (a.is_zero() || b.is_zero()) return;
    check_same(a, b);
    check_same(WeylElement(gs_), a);
    mul_range(a, b, 0, a.term_count(), impl_->acc, scale);
}

void WeylAccumulator::absorb(WeylAccumulator&& other) {
    for (auto& [m, c] : other.impl_->acc) add_to(impl_->acc, m, std::move(c));
    other.impl_->acc.clear();
}

WeylElement WeylAccumulator::finish() {
    WeylElement r(gs_);
    auto terms = capelli::finish(impl_->acc);
    impl_->acc.clear();
    return WeylElement::from_sorted(gs_, std::move(terms));
}

WeylElement WeylElement::from_sorted(GeneratorSetPtr gs, std::vector<Term> terms) {
    WeylElement r(std::move(gs));
    r.terms_ = std::move(terms);
    return r;
}

WeylElement WeylElement::constant(GeneratorSetPtr gs, const Coefficient& c) {
    WeylElement r(gs);
    if (!c.is_zero()) {
        WeylMonomial m;
        m.exps.assign(2 * gs->size(), 0);
        r.terms_.emplace_back(std::move(m), c);
    }
    return r;
}

WeylElement WeylElement::variable(GeneratorSetPtr gs, const std::string& name, int power) {
    std::size_t g = gs->index(name);
    if (power < 0 && int(g) != gs->laurent())
        throw std::invalid_argument("negative power of non-Laurent generator " + name);
    WeylMonomial m;
    m.exps.assign(2 * gs->size(), 0);
    m.exps[g] = narrow(power);
    return monomial(std::move(gs), std::move(m), Coefficient(1));
}

WeylElement WeylElement::derivative(GeneratorSetPtr gs, const std::string& name, int power) {
    if (power < 0) throw std::invalid_argument("negative derivative power");
    std::size_t g = gs->index(name);
    WeylMonomial m;
    m.exps.assign(2 * gs->size(), 0);
    m.exps[gs->size() + g] = narrow(power);
    return monomial(std::move(gs), std::move(m), Coefficient(1));
}

WeylElement WeylElement::monomial(GeneratorSetPtr gs, WeylMonomial m, const Coefficient& c) {
    WeylElement r(std::move(gs));
    if (m.exps.size() != 2 * r.gs_->size()) throw std::invalid_argument("monomial size mismatch");
    m.refresh();
    if (!c.is_zero()) r.terms_.emplace_back(std::move(m), c);
    return r;
}

WeylElement WeylElement::from_terms(GeneratorSetPtr gs, std::vector<Term> terms) {
    Accum acc;
    for (auto& [m, c] : terms) add_to(acc, m, std::move(c));
    WeylElement r(std::move(gs));
    r.terms_ = finish(acc);
    return r;
}

bool WeylElement::is_polynomial() const {
    for (auto& t : terms_)
        if (!t.first.is_polynomial(gs_->size())) return false;
    return true;
}

bool WeylElement::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0 &&
                              std::all_of(terms_[0].first.exps.begin(),
                                          terms_[0].first.exps.end(),
                                          [](auto e) { return e == 0; }));
}

Coefficient WeylElement::constant_term() const {
    for (auto& [m, c] : terms_)
        if (std::all_of(m.exps.begin(), m.exps.end(), [](auto e) { return e == 0; })) return c;
    return {};
}

WeylElement WeylElement::scaled(const Coefficient& c) const {
    if (c.is_zero()) return zero_like();
    WeylElement r = *this;
    for (auto& t : r.terms_) t.second = c * t.second;
    if (!c.is_constant()) {
        std::erase_if(r.terms_, [](const Term& t) { return t.second.is_zero(); });
    }
    return r;
}

WeylElement WeylElement::operator-() const {
    WeylElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    if (a.terms_.empty()) return b.gs_ ? b : WeylElement(a.gs_);
    if (b.terms_.empty()) return a;
    check_same(a, b);
    WeylElement r(a.gs_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && weyl_before(i->first, j->first))) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || weyl_before(j->first, i->first)) {
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

WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + (-b); }

WeylElement mul_serial(const WeylElement& a, const WeylElement& b) {
    check_same(a, b);
    WeylElement r(a.generators() ? a.generators() : b.generators());
    if (a.is_zero() || b.is_zero()) return r;
    Accum acc;
    mul_range(a, b, 0, a.term_count(), acc);
    return WeylElement::from_sorted(r.generators(), finish(acc));
}

WeylElement mul_parallel(const WeylElement& a, const WeylElement& b, int threads, std::size_t min_work) {
#ifdef _OPENMP
    std::size_t work = a.term_count() * b.term_count();
    if (threads == 0) threads = omp_get_max_threads();
    if (work < min_work || threads < 2 || omp_in_parallel() || a.term_count() < 2)
        return mul_serial(a, b);
    check_same(a, b);
    std::vector<Accum> parts(static_cast<std::size_t>(threads));
    std::size_t n = a.term_count();
#pragma omp parallel num_threads(threads)
    {
        std::size_t t = std::size_t(omp_get_thread_num());
        std::size_t nt = std::size_t(omp_get_num_threads());
        std::size_t lo = n * t / nt, hi = n * (t + 1) / nt;
        mul_range(a, b, lo, hi, parts[t]);
    }
    Accum& acc = parts[0];
    for (std::size_t t = 1; t < parts.size(); ++t)
        for (auto& [m, c] : parts[t]) add_to(acc, m, std::move(c));
    WeylElement r(a.generators());
    return WeylElement::from_sorted(r.generators(), finish(acc));
#else
    return mul_serial(a, b);
#endif
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return mul_parallel(a, b); }

WeylElement WeylElement::pow(unsigned e) const {
    WeylElement r = one_like();
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

WeylElement WeylElement::map_coefficients(
    const std::function<Coefficient(const Coefficient&)>& f) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (auto& [m, c] : terms_) t.emplace_back(m, f(c));
    return from_terms(gs_, std::move(t));
}

WeylElement bar(const WeylElement& x) {
    return x.map_coefficients([](const Coefficient& c) { return bar(c); });
}

std::string WeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::size_t G = gs_->size();
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string mono;
        auto factor = [&](const std::string& name, int e) {
            if (!e) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        for (std::size_t g = 0; g < G; ++g) factor(gs_->name(g), m.exps[g]);
        for (std::size_t g = 0; g < G; ++g) factor("d" + gs_->name(g), m.exps[G + g]);
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

WeylElement apply(const WeylElement& op, const WeylElement& p) {
    check_same(op, p);
    if (!p.is_polynomial()) throw std::invalid_argument("apply: argument is not a polynomial");
    std::size_t G = op.generators()->size();
    int laurent = op.generators()->laurent();
    Accum acc;
    for (auto& [mo, co] : op.terms()) {
        for (auto& [mp, cp] : p.terms()) {
            WeylMonomial m;
            m.exps.assign(2 * G, 0);
            Rational factor(1);
            bool dead = false;
            for (std::size_t g = 0; g < G && !dead; ++g) {
                int b = mo.exps[G + g], e = mp.exps[g];
                if (b > 0) {
                    if (int(g) != laurent && e < b) {
                        dead = true;
                        break;
                    }
                    factor *= falling(e, b);
                }
                m.exps[g] = narrow(mo.exps[g] + e - b);
            }
            if (dead || factor.is_zero()) continue;
            add_to(acc, m, (co * cp).scaled(Coefficient(factor)));
        }
    }
    return WeylElement::from_sorted(op.generators(), finish(acc));
}

GeneratorSetPtr phase_space(const GeneratorSetPtr& gs) {
    std::vector<std::string> names = gs->names();
    for (auto& n : gs->names()) names.push_back("p" + n);
    return GeneratorSet::make(std::move(names));
}

WeylElement wick(const WeylElement& p, const GeneratorSetPtr& target) {
    std::size_t G = target->size();
    if (p.generators()->size() != 2 * G) throw std::invalid_argument("wick: not a phase space");
    if (!p.is_polynomial()) throw std::invalid_argument("wick: argument is not a polynomial");
    std::vector<WeylElement::Term> out;
    for (auto& [m, c] : p.terms()) {
        WeylMonomial w;
        w.exps.assign(m.exps.begin(), m.exps.begin() + std::ptrdiff_t(2 * G));
        out.emplace_back(std::move(w), c);
    }
    return WeylElement::from_terms(target, std::move(out));
}

WeylElement exact_divide(const WeylElement& p, const WeylElement& q) {
    check_same(p, q);
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!p.is_polynomial() || !q.is_polynomial())
        throw std::invalid_argument("exact_divide: arguments must be polynomials");
    std::size_t G = q.generators()->size();
    int laurent = q.generators()->laurent();
    auto& [mq, cq] = q.terms().front();
    if (!cq.is_constant()) throw NotDivisible("leading coefficient of divisor is not constant");
    Coefficient inv(cq.constant_value().inverse());
    WeylElement rem = p;
    std::vector<WeylElement::Term> quot;
    while (!rem.is_zero()) {
        auto& [mr, cr] = rem.terms().front();
        WeylMonomial m;
        m.exps.assign(2 * G, 0);
        for (std::size_t g = 0; g < G; ++g) {
            int e = mr.exps[g] - mq.exps[g];
            if (e < 0 && int(g) != laurent)
                throw NotDivisible("remainder term " + rem.to_string() + " not divisible");
            m.exps[g] = narrow(e);
        }
        Coefficient c = cr * inv;
        WeylElement t = WeylElement::monomial(q.generators(), m, c);
        quot.emplace_back(std::move(m), c);
        rem = rem - t * q;
    }
    return WeylElement::from_terms(q.generators(), std::move(quot));
}

ComplexPair complex_pair(const GeneratorSetPtr& gs, const std::string& base) {
    std::string xn = "x" + base, yn = "y" + base;
    if (gs->find(xn) < 0 || gs->find(yn) < 0)
        throw std::invalid_argument("complex_pair: missing generators for " + base);
    Coefficient i = Coefficient::i();
    Coefficient half(Rational(1, 2));
    WeylElement z = WeylElement::variable(gs, xn) + WeylElement::variable(gs, yn).scaled(i);
    WeylElement dz = (WeylElement::derivative(gs, xn) - WeylElement::derivative(gs, yn).scaled(i))
                         .scaled(half);
    return {std::move(z), std::move(dz)};
}

} // namespace capelli
