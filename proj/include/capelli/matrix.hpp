#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "capelli/ring.hpp"

namespace capelli {

// Strictly increasing list of 0-based positions.
using MultiIndex = std::vector<std::size_t>;

MultiIndex double_index(const MultiIndex& I);
std::vector<MultiIndex> subsets(std::size_t n, std::size_t r);

template <Ring R>
class RingMatrix {
public:
    RingMatrix(std::size_t rows, std::size_t cols, const R& proto)
        : rows_(rows), cols_(cols), entries_(rows * cols, proto.zero_like()) {}

    static RingMatrix identity(std::size_t n, const R& proto) {
        RingMatrix m(n, n, proto);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = proto.one_like();
        return m;
    }

    static RingMatrix diag(const std::vector<R>& values) {
        if (values.empty()) throw std::invalid_argument("diag of empty list");
        RingMatrix m(values.size(), values.size(), values.front());
        for (std::size_t k = 0; k < values.size(); ++k) m(k, k) = values[k];
        return m;
    }

    static RingMatrix diag(const std::vector<Coefficient>& values, const R& proto) {
        RingMatrix m(values.size(), values.size(), proto);
        for (std::size_t k = 0; k < values.size(); ++k) m(k, k) = constant_like(proto, values[k]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    R& operator()(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
    const R& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    const R& proto() const { return entries_.front(); }
    const std::vector<R>& entries() const { return entries_; }

    RingMatrix map(const std::function<R(const R&)>& f) const {
        RingMatrix m = *this;
        for (auto& e : m.entries_) e = f(e);
        return m;
    }

    RingMatrix transpose() const {
        RingMatrix m(cols_, rows_, proto());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    RingMatrix scaled(const Coefficient& k) const {
        return map([&](const R& e) { return e.scaled(k); });
    }

    RingMatrix submatrix(const MultiIndex& I, const MultiIndex& J) const {
        for (auto i : I)
            if (i >= rows_) throw std::out_of_range("submatrix row index");
        for (auto j : J)
            if (j >= cols_) throw std::out_of_range("submatrix column index");
        RingMatrix m(I.size(), J.size(), proto());
        for (std::size_t a = 0; a < I.size(); ++a)
            for (std::size_t b = 0; b < J.size(); ++b) m(a, b) = (*this)(I[a], J[b]);
        return m;
    }

    friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
        a.check_same_shape(b);
        RingMatrix m = a;
        for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
        return m;
    }

    friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
        a.check_same_shape(b);
        RingMatrix m = a;
        for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
        return m;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            if (!(a.entries_[k] == b.entries_[k])) return false;
        return true;
    }

    // entries multiply in written order, A-entry on the left
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matmul dimension mismatch");
        RingMatrix m(a.rows_, b.cols_, a.proto());
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) {
                auto acc = accumulator_for(a.proto());
                for (std::size_t k = 0; k < a.cols_; ++k) acc.add_product(a(r, k), b(k, c));
                m(r, c) = acc.finish();
            }
        return m;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const R& e) { return e.is_zero(); });
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r) out += "; ";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) out += ", ";
                out += (*this)(r, c).to_string();
            }
        }
        return out;
    }

private:
    void check_same_shape(const RingMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<R> entries_;
};

template <Ring R>
RingMatrix<R> bar_entries(const RingMatrix<R>& M) requires ConjugateRing<R> {
    return M.map([](const R& e) { return bar(e); });
}

namespace detail {

inline void require_square(std::size_t rows, std::size_t cols) {
    if (rows != cols) throw std::invalid_argument("column determinant of a non-square matrix");
}

// Depth-first permutation expansion from column `col` onwards, multiplying
// the running prefix by one entry of each successive column.
template <Ring R, class Acc>
void expand_columns(const RingMatrix<R>& M, std::size_t col, std::vector<bool>& used,
                    const R& prefix, bool negative, Acc& out) {
    std::size_t n = M.rows();
    if (col + 1 == n) {
        // last column: a single free row remains
        std::size_t row = 0;
        while (used[row]) ++row;
        std::size_t larger_used = n - 1 - row;
        bool neg = negative ^ (larger_used % 2 == 1);
        out.add_product(prefix, M(row, col), Coefficient(neg ? -1 : 1));
        return;
    }
    std::size_t larger_used = 0;
    for (std::size_t r = n; r-- > 0;) {
        if (used[r]) {
            ++larger_used;
            continue;
        }
        const R& e = M(r, col);
        if (!e.is_zero()) {
            used[r] = true;
            expand_columns(M, col + 1, used, prefix * e, negative ^ (larger_used % 2 == 1), out);
            used[r] = false;
        }
    }
}

} // namespace detail

// Reference column determinant: permutation expansion, single thread.
template <Ring R>
R coldet_serial(const RingMatrix<R>& M) {
    detail::require_square(M.rows(), M.cols());
    std::vector<bool> used(M.rows(), false);
    auto acc = accumulator_for(M.proto());
    detail::expand_columns(M, 0, used, M.proto().one_like(), false, acc);
    return acc.finish();
}

// Permutation expansion with the first two columns split across OpenMP threads.
// threads = 0 uses the OpenMP default.
template <Ring R>
R coldet(const RingMatrix<R>& M, int threads = 0) {
    detail::require_square(M.rows(), M.cols());
    std::size_t n = M.rows();
#ifdef _OPENMP
    if (threads == 0) threads = omp_get_max_threads();
    if (n < 3 || omp_in_parallel() || threads < 2) return coldet_serial(M);
    std::vector<std::pair<std::size_t, std::size_t>> seeds;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b) seeds.emplace_back(a, b);
    std::vector<R> partial(seeds.size(), M.proto().zero_like());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t k = 0; k < seeds.size(); ++k) {
        auto [a, b] = seeds[k];
        if (M(a, 0).is_zero() || M(b, 1).is_zero()) continue;
        std::vector<bool> used(n, false);
        used[a] = used[b] = true;
        bool negative = a > b;
        auto acc = accumulator_for(M.proto());
        detail::expand_columns(M, 2, used, M(a, 0) * M(b, 1), negative, acc);
        partial[k] = acc.finish();
    }
    return tree_sum(std::move(partial), M.proto());
#else
    return coldet_serial(M);
#endif
}

// First-column expansion memoized on row subsets, evaluated from the last
// column backwards so each step multiplies one entry on the left.
template <Ring R>
R coldet_laplace(const RingMatrix<R>& M) {
    detail::require_square(M.rows(), M.cols());
    std::size_t n = M.rows();
    if (n > 20) throw std::invalid_argument("coldet_laplace: matrix too large");
    std::size_t full = (std::size_t(1) << n);
    std::vector<R> memo(full, M.proto().zero_like());
    memo[0] = M.proto().one_like();
    for (std::size_t size = 1; size <= n; ++size) {
        std::size_t col = n - size;
        for (std::size_t S = 1; S < full; ++S) {
            if (std::size_t(__builtin_popcountll(S)) != size) continue;
            auto acc = accumulator_for(M.proto());
            std::size_t pos = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (!(S >> r & 1)) continue;
                std::size_t rest = S & ~(std::size_t(1) << r);
                acc.add_product(M(r, col), memo[rest], Coefficient(pos % 2 ? -1 : 1));
                ++pos;
            }
            memo[S] = acc.finish();
        }
    }
    return memo[full - 1];
}

// Real form: each entry m becomes [[Re m, Im m], [-Im m, Re m]].
template <ConjugateRing R>
RingMatrix<R> decomplexify(const RingMatrix<R>& M) {
    RingMatrix<R> out(2 * M.rows(), 2 * M.cols(), M.proto());
    Coefficient half(Rational(1, 2));
    Coefficient minus_half_i = Coefficient(GaussianRational(Rational(0), Rational(-1, 2)));
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) {
            const R& m = M(r, c);
            R mb = bar(m);
            R re = (m + mb).scaled(half);
            R im = (m - mb).scaled(minus_half_i); // 1/(2i) = -i/2
            out(2 * r, 2 * c) = re;
            out(2 * r, 2 * c + 1) = im;
            out(2 * r + 1, 2 * c) = -im;
            out(2 * r + 1, 2 * c + 1) = re;
        }
    return out;
}

enum class CorrSign { plus, minus };

// Block diagonal with blocks [[d + 1/4, ±i/4], [±i/4, d - 1/4]], one block per
// entry of ds in the given order.
template <Ring R>
RingMatrix<R> corr_tridiag(const std::vector<Coefficient>& ds, CorrSign sign, const R& proto) {
    std::size_t n = ds.size();
    RingMatrix<R> out(2 * n, 2 * n, proto);
    Coefficient quarter(Rational(1, 4));
    Coefficient off(GaussianRational(Rational(0), Rational(sign == CorrSign::plus ? 1 : -1, 4)));
    for (std::size_t k = 0; k < n; ++k) {
        out(2 * k, 2 * k) = constant_like(proto, ds[k] + quarter);
        out(2 * k, 2 * k + 1) = constant_like(proto, off);
        out(2 * k + 1, 2 * k) = constant_like(proto, off);
        out(2 * k + 1, 2 * k + 1) = constant_like(proto, ds[k] - quarter);
    }
    return out;
}

inline std::vector<Coefficient> capelli_shifts(std::size_t n) {
    std::vector<Coefficient> ds;
    for (std::size_t k = 0; k < n; ++k) ds.emplace_back(std::int64_t(n - 1 - k));
    return ds;
}

} // namespace capelli
