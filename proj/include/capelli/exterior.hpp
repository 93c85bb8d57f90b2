#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "capelli/matrix.hpp"
#include "capelli/ring.hpp"

namespace capelli {

// Exterior algebra over psi_1..psi_m with coefficients in a host ring R.
// Host coefficients commute with every psi and are kept on the left of the
// mask; products multiply host coefficients in factor order.
template <Ring R>
class ExteriorElement {
public:
    using Mask = std::uint32_t;

    ExteriorElement(std::size_t m, const R& proto) : m_(m), proto_(proto.zero_like()) {
        if (m > 31) throw std::invalid_argument("too many exterior generators");
    }

    static ExteriorElement generator(std::size_t m, std::size_t k, const R& coeff) {
        ExteriorElement e(m, coeff);
        if (k >= m) throw std::out_of_range("exterior generator index");
        if (!coeff.is_zero()) e.terms_.emplace(Mask(1) << k, coeff);
        return e;
    }

    static ExteriorElement top(std::size_t m, const R& coeff) {
        ExteriorElement e(m, coeff);
        if (!coeff.is_zero()) e.terms_.emplace(full_mask(m), coeff);
        return e;
    }

    static Mask full_mask(std::size_t m) { return m == 32 ? ~Mask(0) : (Mask(1) << m) - 1; }

    std::size_t generators() const { return m_; }
    const std::map<Mask, R>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    R coefficient(Mask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? proto_.zero_like() : it->second;
    }

    ExteriorElement zero_like() const { return ExteriorElement(m_, proto_); }
    ExteriorElement one_like() const {
        ExteriorElement e(m_, proto_);
        e.terms_.emplace(0, proto_.one_like());
        return e;
    }

    ExteriorElement scaled(const Coefficient& c) const {
        ExteriorElement e(m_, proto_);
        for (auto& [mask, r] : terms_) e.put(mask, r.scaled(c));
        return e;
    }

    ExteriorElement operator-() const { return scaled(Coefficient(-1)); }

    friend ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b) {
        a.check_same(b);
        ExteriorElement e = a;
        for (auto& [mask, r] : b.terms_) e.add_to(mask, r);
        return e;
    }

    friend ExteriorElement operator-(const ExteriorElement& a, const ExteriorElement& b) { return a + (-b); }

    friend ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b) {
        a.check_same(b);
        std::map<Mask, decltype(accumulator_for(a.proto_))> accs;
        for (auto& [ma, ra] : a.terms_)
            for (auto& [mb, rb] : b.terms_) {
                if (ma & mb) continue;
                Mask mask = ma | mb;
                auto it = accs.find(mask);
                if (it == accs.end()) it = accs.emplace(mask, accumulator_for(a.proto_)).first;
                it->second.add_product(ra, rb, Coefficient(merge_sign(ma, mb)));
            }
        ExteriorElement e(a.m_, a.proto_);
        for (auto& [mask, acc] : accs) e.put(mask, acc.finish());
        return e;
    }

    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) { return (a - b).is_zero(); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [mask, r] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + r.to_string() + ")";
            for (std::size_t k = 0; k < m_; ++k)
                if (mask >> k & 1) out += "*psi" + std::to_string(k + 1);
        }
        return out;
    }

    // sign of psi_S * psi_T -> psi_{S|T} for disjoint S, T
    static int merge_sign(Mask s, Mask t) {
        int inversions = 0;
        for (Mask rest = t; rest; rest &= rest - 1) {
            Mask bit = rest & -rest;
            inversions += std::popcount(s & ~((bit << 1) - 1));
        }
        return inversions % 2 ? -1 : 1;
    }

private:
    void check_same(const ExteriorElement& b) const {
        if (m_ != b.m_) throw std::invalid_argument("exterior elements of different rank");
    }
    void put(Mask mask, R r) {
        if (!r.is_zero()) terms_.insert_or_assign(mask, std::move(r));
    }
    void add_to(Mask mask, const R& r) {
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            put(mask, r);
            return;
        }
        it->second = it->second + r;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::size_t m_;
    R proto_;
    std::map<Mask, R> terms_;
};

// psi^M_k = sum_i M_ik psi_i
template <Ring R>
ExteriorElement<R> psi_M(const RingMatrix<R>& M, std::size_t k) {
    if (k >= M.cols()) throw std::out_of_range("psi_M column");
    ExteriorElement<R> e(M.rows(), M.proto());
    for (std::size_t i = 0; i < M.rows(); ++i)
        e = e + ExteriorElement<R>::generator(M.rows(), i, M(i, k));
    return e;
}

// psi^M_1 * ... * psi^M_n, whose top coefficient is coldet(M)
template <Ring R>
ExteriorElement<R> psi_product(const RingMatrix<R>& M) {
    ExteriorElement<R> e = ExteriorElement<R>(M.rows(), M.proto()).one_like();
    for (std::size_t k = 0; k < M.cols(); ++k) e = e * psi_M(M, k);
    return e;
}

} // namespace capelli
