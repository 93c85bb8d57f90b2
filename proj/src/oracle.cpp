#include "capelli/oracle.hpp"

#include <functional>

namespace capelli {

std::vector<WeylElement> monomials_up_to(const GeneratorSetPtr& gs, unsigned deg) {
    std::size_t G = gs->size();
    std::vector<WeylElement> out;
    WeylMonomial m;
    m.exps.assign(2 * G, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t g, unsigned left) {
        if (g == G) {
            out.push_back(WeylElement::monomial(gs, m, Coefficient(1)));
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            m.exps[g] = std::int8_t(e);
            rec(g + 1, left - e);
        }
        m.exps[g] = 0;
    };
    rec(0, deg);
    return out;
}

WeylElement apply_coldet(const RingMatrix<WeylElement>& M, const WeylElement& p) {
    if (!M.square()) throw std::invalid_argument("apply_coldet of a non-square matrix");
    std::size_t n = M.rows();
    std::size_t full = std::size_t(1) << n;
    // memo[S]: action of the column determinant of rows S, columns n-|S|..n-1
    std::vector<WeylElement> memo(full, p.zero_like());
    memo[0] = p;
    for (std::size_t size = 1; size <= n; ++size) {
        std::size_t col = n - size;
        for (std::size_t S = 1; S < full; ++S) {
            if (std::size_t(__builtin_popcountll(S)) != size) continue;
            WeylElement acc = p.zero_like();
            std::size_t pos = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (!(S >> r & 1)) continue;
                const WeylElement& rest = memo[S & ~(std::size_t(1) << r)];
                if (!rest.is_zero() && !M(r, col).is_zero()) {
                    WeylElement t = apply(M(r, col), rest);
                    acc = pos % 2 ? acc - t : acc + t;
                }
                ++pos;
            }
            memo[S] = std::move(acc);
        }
    }
    return memo[full - 1];
}

ActionCheck check_action(const RingMatrix<WeylElement>& M, const WeylElement& lhs_operator,
                         const std::vector<RingMatrix<WeylElement>>& rhs_factors, unsigned deg) {
    ActionCheck out;
    for (auto& p : monomials_up_to(M.proto().generators(), deg)) {
        WeylElement nested = apply_coldet(M, p);
        WeylElement direct = apply(lhs_operator, p);
        WeylElement rhs = p;
        for (auto it = rhs_factors.rbegin(); it != rhs_factors.rend(); ++it) rhs = apply_coldet(*it, rhs);
        ++out.tested;
        if (!(nested == direct) || !(nested == rhs)) {
            out.agree = false;
            out.first_mismatch = "on " + p.to_string() + ": nested " + nested.to_string() + ", operator " +
                                 direct.to_string() + ", rhs " + rhs.to_string();
            break;
        }
    }
    return out;
}

} // namespace capelli
