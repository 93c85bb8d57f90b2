#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capelli/coefficient.hpp"

namespace capelli {

class NonConfluentTable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SwapPolicy { none, commute, anticommute };

using Word = std::vector<std::uint8_t>;
using WordSum = std::vector<std::pair<Word, Coefficient>>;

bool word_before(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_before(a, b); }
};
using WordMap = std::map<Word, Coefficient, WordLess>;

// Letters with per-pair swap policies, square-zero letters and optional
// custom rewrite rules on two-letter words. Adjacent letters a b with a > b
// (in letter order) and a commute/anticommute policy are rewritten to ±b a.
class SwapTable {
public:
    explicit SwapTable(std::vector<std::string> letters);

    static std::shared_ptr<const SwapTable> grassmann(std::size_t m);

    std::size_t size() const { return letters_.size(); }
    const std::string& letter(std::size_t k) const { return letters_[k]; }
    int find(const std::string& name) const;
    std::size_t index(const std::string& name) const;

    void set_policy(std::size_t a, std::size_t b, SwapPolicy p);
    SwapPolicy policy(std::size_t a, std::size_t b) const { return policy_[a * size() + b]; }
    void set_square_zero(std::size_t a, bool zero = true);
    bool square_zero(std::size_t a) const { return square_zero_[a]; }
    // rewrite a b -> rhs; overrides the policy for that ordered pair
    void set_rule(std::size_t a, std::size_t b, WordSum rhs);
    // barred letters and the conjugation map between letters
    void set_barred(std::size_t a, bool barred) { barred_.at(a) = barred; }
    bool barred(std::size_t a) const { return barred_[a]; }
    void set_bar_pair(std::size_t a, std::size_t b);
    bool has_bar() const;
    std::size_t bar_of(std::size_t a) const { return bar_.at(a); }

    // Runs the local confluence check over all letter triples; throws
    // NonConfluentTable on the first failure.
    void check_confluence() const;

    // canonical form of c * word, accumulated into out
    void normalize_into(const Word& word, const Coefficient& c,
                        WordMap& out) const;
    WordSum normalize(const Word& word) const;
    std::string render(const Word& w) const;

private:
    const WordSum* rule(std::size_t a, std::size_t b, WordSum& scratch) const;
    void rewrite(const Word& word, const Coefficient& c, std::size_t& budget,
                 WordMap& out) const;

    std::vector<std::string> letters_;
    std::vector<SwapPolicy> policy_;
    std::vector<bool> square_zero_;
    std::vector<bool> barred_;
    std::vector<int> bar_;
    std::map<std::pair<std::size_t, std::size_t>, WordSum> rules_;
};

using SwapTablePtr = std::shared_ptr<const SwapTable>;

class SwapElement {
public:
    SwapElement() = default;
    explicit SwapElement(SwapTablePtr table) : table_(std::move(table)) {}

    static SwapElement constant(SwapTablePtr table, const Coefficient& c);
    static SwapElement letter(SwapTablePtr table, const std::string& name);
    static SwapElement letter(SwapTablePtr table, std::size_t k);
    static SwapElement word(SwapTablePtr table, const Word& w, const Coefficient& c = Coefficient(1));

    const SwapTablePtr& table() const { return table_; }
    const WordSum& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    SwapElement zero_like() const { return SwapElement(table_); }
    SwapElement one_like() const { return constant(table_, Coefficient(1)); }
    SwapElement scaled(const Coefficient& c) const;

    SwapElement operator-() const;
    friend SwapElement operator+(const SwapElement& a, const SwapElement& b);
    friend SwapElement operator-(const SwapElement& a, const SwapElement& b);
    friend SwapElement operator*(const SwapElement& a, const SwapElement& b);
    friend bool operator==(const SwapElement& a, const SwapElement& b) { return a.terms_ == b.terms_; }

    SwapElement substitute(const std::map<std::string, Coefficient>& bindings) const;
    std::string to_string() const;

private:
    SwapTablePtr table_;
    WordSum terms_;
};

SwapElement bar(const SwapElement& x);

// Component with exactly hol unbarred and antihol barred letters per word.
SwapElement bigrade_project(const SwapElement& x, std::size_t hol, std::size_t antihol);
// Set of (unbarred, barred) letter counts present in x.
std::vector<std::pair<std::size_t, std::size_t>> bidegrees(const SwapElement& x);

// Letters psi, phi, psi_bar, phi_bar; barred and unbarred letters
// anticommute, no relations inside each group.
SwapTablePtr psi_phi_table();
// psi_phi_table plus psi^2 -> psi*phi, phi*psi -> -psi*phi, phi^2 -> 0 and
// the barred mirror rules.
SwapTablePtr psi_phi_nilpotent_table();
// Letters M_ij then Mb_ij (column-major); letters in one column commute and
// every barred letter commutes with every unbarred one.
SwapTablePtr column_commuting_table(std::size_t n);

} // namespace capelli
