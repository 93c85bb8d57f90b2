#pragma once

#include <optional>
#include <vector>

#include "capelli/exterior.hpp"
#include "capelli/matrix.hpp"
#include "capelli/ring.hpp"

namespace capelli {

// Entries in one column commute.
template <Ring R>
bool check_column_commuting(const RingMatrix<R>& M) {
    for (std::size_t k = 0; k < M.cols(); ++k)
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (std::size_t j = i + 1; j < M.rows(); ++j)
                if (!commutator(M(i, k), M(j, k)).is_zero()) return false;
    return true;
}

// [alpha, bar(beta)] = 0 for all entries alpha, beta of the given matrices.
template <ConjugateRing R>
bool check_bar_commuting(const std::vector<RingMatrix<R>>& mats) {
    std::vector<R> all, bars;
    for (auto& M : mats)
        for (auto& e : M.entries()) {
            all.push_back(e);
            bars.push_back(bar(e));
        }
    for (auto& a : all)
        for (auto& b : bars)
            if (!commutator(a, b).is_zero()) return false;
    return true;
}

// Column commutativity plus [M_ij, M_kl] = [M_kj, M_il] for i < k, j < l.
template <Ring R>
bool check_manin(const RingMatrix<R>& M) {
    if (!check_column_commuting(M)) return false;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t k = i + 1; k < M.rows(); ++k)
            for (std::size_t j = 0; j < M.cols(); ++j)
                for (std::size_t l = j + 1; l < M.cols(); ++l)
                    if (!(commutator(M(i, j), M(k, l)) - commutator(M(k, j), M(i, l))).is_zero()) return false;
    return true;
}

// Independent Manin test: the psi^M_k anticommute, squares included.
template <Ring R>
bool check_manin_grassmann(const RingMatrix<R>& M) {
    for (std::size_t a = 0; a < M.cols(); ++a)
        for (std::size_t b = a; b < M.cols(); ++b) {
            auto pa = psi_M(M, a), pb = psi_M(M, b);
            if (!(pa * pb + pb * pa).is_zero()) return false;
        }
    return true;
}

// [Y_lj, M_rp] = delta_lp Q_rj
template <Ring R>
bool check_css(const RingMatrix<R>& M, const RingMatrix<R>& Y, const RingMatrix<R>& Q) {
    std::size_t n = M.rows();
    for (std::size_t l = 0; l < Y.rows(); ++l)
        for (std::size_t j = 0; j < Y.cols(); ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t p = 0; p < M.cols(); ++p) {
                    R expected = l == p ? Q(r, j) : M.proto().zero_like();
                    if (!(commutator(Y(l, j), M(r, p)) - expected).is_zero()) return false;
                }
    return true;
}

// [M_ij, Y_kl] = -h (delta_jk delta_il + delta_ik delta_jl) with h commuting
// with every entry of M and Y; returns h on success.
template <Ring R>
std::optional<R> check_tcss(const RingMatrix<R>& M, const RingMatrix<R>& Y) {
    std::size_t n = M.rows();
    R h = commutator(M(0, 0), Y(0, 0)).scaled(Coefficient(Rational(-1, 2)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    int mult = int(j == k && i == l) + int(i == k && j == l);
                    R expected = h.scaled(Coefficient(-mult));
                    if (!(commutator(M(i, j), Y(k, l)) - expected).is_zero()) return std::nullopt;
                }
    for (auto* mat : {&M, &Y})
        for (auto& e : mat->entries())
            if (!commutator(h, e).is_zero()) return std::nullopt;
    return h;
}

// Sum_l psi^M_l [Y_lj, psi^M_p] = psi^M_p psi^Q_j and psi^Q_j psi^M_p + psi^M_p psi^Q_j = 0.
template <Ring R>
bool check_gcss(const RingMatrix<R>& M, const RingMatrix<R>& Y, const RingMatrix<R>& Q) {
    std::size_t m = M.rows();
    for (std::size_t j = 0; j < Y.cols(); ++j) {
        auto pq = psi_M(Q, j);
        for (std::size_t p = 0; p < M.cols(); ++p) {
            auto pm = psi_M(M, p);
            ExteriorElement<R> lhs(m, M.proto());
            for (std::size_t l = 0; l < Y.rows(); ++l) {
                // [Y_lj, psi^M_p] = sum_i [Y_lj, M_ip] psi_i
                ExteriorElement<R> br(m, M.proto());
                for (std::size_t i = 0; i < m; ++i)
                    br = br + ExteriorElement<R>::generator(m, i, commutator(Y(l, j), M(i, p)));
                lhs = lhs + psi_M(M, l) * br;
            }
            if (!(lhs - pm * pq).is_zero()) return false;
            if (!(pq * pm + pm * pq).is_zero()) return false;
        }
    }
    return true;
}

struct FactorizationRelations {
    bool psi_c_square = true; // [C_ik, C_jk] = C_ik Q_jk - C_jk Q_ik
    bool psi_c_psi_q = true;  // [C_ik, Q_jk] = [C_jk, Q_ik]
    bool psi_q_square = true; // [Q_ik, Q_jk] = 0
    bool all() const { return psi_c_square && psi_c_psi_q && psi_q_square; }
};

template <Ring R>
FactorizationRelations factorization_relations(const RingMatrix<R>& C, const RingMatrix<R>& Q) {
    FactorizationRelations out;
    std::size_t n = C.rows();
    for (std::size_t k = 0; k < C.cols(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (out.psi_c_square &&
                    !(commutator(C(i, k), C(j, k)) - (C(i, k) * Q(j, k) - C(j, k) * Q(i, k))).is_zero())
                    out.psi_c_square = false;
                if (out.psi_c_psi_q && !(commutator(C(i, k), Q(j, k)) - commutator(C(j, k), Q(i, k))).is_zero())
                    out.psi_c_psi_q = false;
                if (out.psi_q_square && !commutator(Q(i, k), Q(j, k)).is_zero()) out.psi_q_square = false;
            }
    return out;
}

template <Ring R>
bool check_factorization_relations(const RingMatrix<R>& C, const RingMatrix<R>& Q) {
    return factorization_relations(C, Q).all();
}

} // namespace capelli
