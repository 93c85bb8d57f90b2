#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "capelli/coefficient.hpp"

namespace capelli {

class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GeneratorSet {
public:
    // laurent names at most one generator that may carry negative exponents
    static std::shared_ptr<const GeneratorSet> make(std::vector<std::string> names,
                                                    const std::string& laurent = "");

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t g) const { return names_[g]; }
    const std::vector<std::string>& names() const { return names_; }
    int find(const std::string& name) const; // -1 when absent
    std::size_t index(const std::string& name) const;
    int laurent() const { return laurent_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    int laurent_ = -1;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

// Normal-ordered monomial x^a d^b; exps holds a (size G) followed by b (size G).
struct WeylMonomial {
    using Exponents = boost::container::small_vector<std::int8_t, 48>;
    Exponents exps;
    // cached total degree, refreshed whenever a term is stored in an element
    int deg = 0;

    int degree() const;
    void refresh() { deg = degree(); }
    bool is_polynomial(std::size_t g) const;
    friend bool operator==(const WeylMonomial& a, const WeylMonomial& b) { return a.exps == b.exps; }
};

struct WeylMonomialHash {
    std::size_t operator()(const WeylMonomial& m) const noexcept;
};

bool weyl_before(const WeylMonomial& a, const WeylMonomial& b);

class WeylElement {
public:
    using Term = std::pair<WeylMonomial, Coefficient>;

    WeylElement() = default;
    explicit WeylElement(GeneratorSetPtr gs) : gs_(std::move(gs)) {}

    static WeylElement constant(GeneratorSetPtr gs, const Coefficient& c);
    static WeylElement variable(GeneratorSetPtr gs, const std::string& name, int power = 1);
    static WeylElement derivative(GeneratorSetPtr gs, const std::string& name, int power = 1);
    static WeylElement monomial(GeneratorSetPtr gs, WeylMonomial m, const Coefficient& c);
    // canonicalizes arbitrary (possibly repeated, unsorted) terms
    static WeylElement from_terms(GeneratorSetPtr gs, std::vector<Term> terms);
    // terms already canonical: sorted, merged, nonzero, degrees refreshed
    static WeylElement from_sorted(GeneratorSetPtr gs, std::vector<Term> terms);

    const GeneratorSetPtr& generators() const { return gs_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;
    bool is_constant() const;
    Coefficient constant_term() const;

    WeylElement zero_like() const { return WeylElement(gs_); }
    WeylElement one_like() const { return constant(gs_, Coefficient(1)); }
    WeylElement scaled(const Coefficient& c) const;

    WeylElement operator-() const;
    friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    WeylElement& operator+=(const WeylElement& b) { return *this = *this + b; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.terms_ == b.terms_;
    }

    WeylElement pow(unsigned e) const;
    WeylElement map_coefficients(const std::function<Coefficient(const Coefficient&)>& f) const;
    std::string to_string() const;

private:
    GeneratorSetPtr gs_;
    std::vector<Term> terms_;
};

// Sums products into one hash table so that a long sum of products is
// sorted once at the end instead of merged pairwise.
class WeylAccumulator {
public:
    explicit WeylAccumulator(GeneratorSetPtr gs);
    ~WeylAccumulator();
    WeylAccumulator(WeylAccumulator&&) noexcept;
    WeylAccumulator& operator=(WeylAccumulator&&) noexcept;

    void add(const WeylElement& x, const Coefficient& scale = Coefficient(1));
    void add_product(const WeylElement& a, const WeylElement& b,
                     const Coefficient& scale = Coefficient(1));
    // merges another accumulator into this one
    void absorb(WeylAccumulator&& other);
    WeylElement finish();

private:
    struct Impl;
    GeneratorSetPtr gs_;
    std::unique_ptr<Impl> impl_;
};

inline WeylAccumulator make_accumulator(const WeylElement& proto) {
    return WeylAccumulator(proto.generators());
}

// Single-threaded product, kept as the reference for the parallel kernel.
WeylElement mul_serial(const WeylElement& a, const WeylElement& b);
// Product that splits the left operand across OpenMP threads once the term
// count product reaches min_work; threads = 0 uses the OpenMP default.
WeylElement mul_parallel(const WeylElement& a, const WeylElement& b, int threads = 0, std::size_t min_work = 20000);

WeylElement bar(const WeylElement& x);

// Action of a differential operator on a polynomial.
WeylElement apply(const WeylElement& op, const WeylElement& p);

// Generator set with momentum partners: names followed by "p" + name.
GeneratorSetPtr phase_space(const GeneratorSetPtr& gs);
// Sends z^a p^b (in the phase space of target) to z^a d^b in target.
WeylElement wick(const WeylElement& p, const GeneratorSetPtr& target);

// Returns r with p = q*r for polynomials; throws NotDivisible otherwise.
WeylElement exact_divide(const WeylElement& p, const WeylElement& q);

struct ComplexPair {
    WeylElement z;
    WeylElement dz;
};
// z = x<base> + i*y<base>, dz = (dx<base> - i*dy<base>)/2
ComplexPair complex_pair(const GeneratorSetPtr& gs, const std::string& base);

} // namespace capelli
