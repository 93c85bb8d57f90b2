#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "capelli/coefficient.hpp"

namespace capelli {

using SparseVector = std::vector<std::pair<std::size_t, Coefficient>>;

class LieAlgebraSpec {
public:
    enum class Role { other, lowering, cartan, raising };

    LieAlgebraSpec() = default;
    explicit LieAlgebraSpec(std::vector<std::string> basis);

    // Text table: "basis <names...>" followed by lines "bracket u v w coeff",
    // each adding coeff*w to [u, v]. Lines starting with '#' are ignored.
    static LieAlgebraSpec from_text(const std::string& text);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t g) const { return names_[g]; }
    int find(const std::string& name) const;
    std::size_t index(const std::string& name) const;

    // adds coeff*w to [u, v] and the negative to [v, u]
    void add_bracket(std::size_t u, std::size_t v, std::size_t w, const Coefficient& coeff);
    const SparseVector& bracket(std::size_t u, std::size_t v) const {
        return brackets_[u * names_.size() + v];
    }

    // throws std::invalid_argument describing the first failing triple
    void check_jacobi() const;

    void set_role(std::size_t g, Role role, int cartan_index = 0);
    Role role(std::size_t g) const { return roles_[g]; }
    int cartan_index(std::size_t g) const { return cartan_[g]; }
    void set_bar(std::vector<std::size_t> bar_map) { bar_ = std::move(bar_map); }
    bool has_bar() const { return !bar_.empty(); }
    std::size_t bar_of(std::size_t g) const { return bar_.at(g); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<SparseVector> brackets_;
    std::vector<Role> roles_;
    std::vector<int> cartan_;
    std::vector<std::size_t> bar_;
};

// gl_n with basis E_ij in the order: lowering (i > j), Cartan, raising (i < j).
LieAlgebraSpec build_gln(std::size_t n);
// Two commuting copies: E_ij in the gl_n order, then Eb_ij in the same order.
LieAlgebraSpec build_doubled_gln(std::size_t n);

using PbwMonomial = std::vector<std::uint8_t>;

struct PbwMonomialHash {
    std::size_t operator()(const PbwMonomial& m) const noexcept;
};

class PbwElement;

class PbwAlgebra {
public:
    explicit PbwAlgebra(LieAlgebraSpec spec);
    const LieAlgebraSpec& spec() const { return spec_; }

    // product of a PBW monomial by one generator on the right, memoized
    const std::vector<std::pair<PbwMonomial, Coefficient>>& times_generator(const PbwMonomial& a,
                                                                            std::size_t v) const;
    std::size_t memo_size() const;

private:
    LieAlgebraSpec spec_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<PbwMonomial, std::shared_ptr<std::vector<std::pair<PbwMonomial, Coefficient>>>,
                               PbwMonomialHash>
        memo_;
};

using PbwAlgebraPtr = std::shared_ptr<const PbwAlgebra>;

PbwAlgebraPtr make_pbw_algebra(LieAlgebraSpec spec);

bool pbw_before(const PbwMonomial& a, const PbwMonomial& b);

class PbwElement {
public:
    using Term = std::pair<PbwMonomial, Coefficient>;

    PbwElement() = default;
    explicit PbwElement(PbwAlgebraPtr alg) : alg_(std::move(alg)) {}

    static PbwElement constant(PbwAlgebraPtr alg, const Coefficient& c);
    static PbwElement generator(PbwAlgebraPtr alg, const std::string& name);
    static PbwElement generator(PbwAlgebraPtr alg, std::size_t g);
    static PbwElement from_terms(PbwAlgebraPtr alg, std::vector<Term> terms);

    const PbwAlgebraPtr& algebra() const { return alg_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    PbwElement zero_like() const { return PbwElement(alg_); }
    PbwElement one_like() const { return constant(alg_, Coefficient(1)); }
    PbwElement scaled(const Coefficient& c) const;

    PbwElement operator-() const;
    friend PbwElement operator+(const PbwElement& a, const PbwElement& b);
    friend PbwElement operator-(const PbwElement& a, const PbwElement& b);
    friend PbwElement operator*(const PbwElement& a, const PbwElement& b);
    friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.terms_ == b.terms_; }

    // polynomial in parameter coefficients: coefficient of param^e
    PbwElement coefficient_of(std::size_t param_index, unsigned e) const;
    int degree_in(std::size_t param_index) const;
    std::string to_string() const;

private:
    PbwAlgebraPtr alg_;
    std::vector<Term> terms_;
};

PbwElement bar(const PbwElement& x);

// Projection onto Cartan-only PBW terms with E_ii^m mapped to lambda_i^m.
Coefficient hc_eigenvalue(const PbwElement& x);
bool is_central(const PbwElement& x);

} // namespace capelli
