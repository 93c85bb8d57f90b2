#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capelli/instances.hpp"
#include "capelli/report.hpp"
#include "capelli/swapalg.hpp"

namespace capelli {

std::string to_string(CorrSign sign);

// diag(n-1, ..., 0); the antisymmetric family needs diag(n-2, ..., -1).
std::vector<Coefficient> classical_shifts(MatrixKind kind, std::size_t n);

// Column determinant with the algorithm picked by size: the permutation
// expansion below 6x6, the subset recursion from 6x6 on.
template <Ring R>
R coldet_auto(const RingMatrix<R>& M) {
    return M.rows() >= 6 ? coldet_laplace(M) : coldet(M);
}

// coldet(Z D^t + diag(shifts)) = det(Z) det(D^t) over real variables.
VerificationReport verify_classical_capelli(MatrixKind kind, std::size_t n);

// coldet(Z^R (D^t)^R + CorrTriDiag) = det(Z^R) det((D^t)^R) over complex variables.
VerificationReport verify_decomplexified_capelli(MatrixKind kind, std::size_t n, CorrSign sign);

// Rectangular form on all multi-indexes I, J of size r.
VerificationReport verify_rectangular(MatrixKind kind, std::size_t n, std::size_t r, CorrSign sign);

// coldet(E^R + CorrTriDiag) = coldet(E + diag) coldet(Eb + diag) in U(gl_n + gl_n).
VerificationReport verify_holfact_capelli(std::size_t n, CorrSign sign);

enum class MainInstance {
    doubled_gl,   // C = E over the doubled enveloping algebra, Q = Id, parametric shifts
    weyl_capelli, // C = Z D^t over complex variables, Q = Id, parametric shifts
    rank_one,     // n = 1, C and Q holomorphic Weyl elements, parametric shift
    rank_one_zero // n = 1 with shift 0
};
std::string to_string(MainInstance inst);
VerificationReport verify_main_theorem(MainInstance inst, std::size_t n, CorrSign sign);

// Local two-letter factorization with condition set 1 (a = c = k, d = b - 2k)
// or 2 (b = k, d = -k, c = 2k - a).
VerificationReport verify_holfactpsi(int condition_set);
VerificationReport verify_holfactpsi_modanti(int condition_set);
VerificationReport verify_coronfact(CorrSign sign);

// Product of n bivectors with holomorphic (or antiholomorphic) corrections,
// plus the nonzero defect of every truncated product.
VerificationReport verify_holfact_general(std::size_t n, bool antiholomorphic);

// coldet(M^R) = coldet(M) coldet(Mb) for column-commuting letters.
VerificationReport verify_theor1(std::size_t n);

enum class CssKind { css, tcss, degenerate };
std::string to_string(CssKind kind);
VerificationReport verify_css_capelli(CssKind kind, std::size_t n, CorrSign sign);
VerificationReport verify_css_conditions(std::size_t n);
VerificationReport verify_implications(std::size_t n);

// Coefficients of coldet(E + diag(n-1..0) + u) in u are central.
VerificationReport verify_center(std::size_t n);
// Harish-Chandra image of the shifted Capelli determinant.
VerificationReport verify_hc(std::size_t n);

// Randomized cross-engine checks with a fixed seed.
VerificationReport oracle_coldet_algorithms(std::uint64_t seed, std::size_t count);
VerificationReport oracle_top_form(std::uint64_t seed, std::size_t count);
VerificationReport oracle_decomplexify(std::uint64_t seed, std::size_t count);
VerificationReport oracle_weyl_action(std::uint64_t seed, std::size_t count);
VerificationReport oracle_kernels(std::uint64_t seed, std::size_t count);

} // namespace capelli
