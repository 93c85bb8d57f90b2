#pragma once

#include <string>
#include <vector>

#include "capelli/instances.hpp"
#include "capelli/report.hpp"

namespace capelli {

enum class CayleyKind { classical, decomplexified, quaternion_complex, quaternion_real, radial };

std::string to_string(CayleyKind kind);

struct CayleyRunConfig {
    std::size_t n = 1;
    CayleyKind kind = CayleyKind::classical;
    std::vector<int> s_values; // empty: default_s_values(kind, n)
};

// 1..n+2, extended when the expected polynomial needs more points.
std::vector<int> default_s_values(CayleyKind kind, std::size_t n);

// Expected quotient as a polynomial in the parameter s.
Coefficient cayley_expected(CayleyKind kind, std::size_t n);

// s(s+1)...(s+n-1)
Coefficient b_polynomial(std::size_t n);

// Polynomial in the parameter s through the points (s_k, values_k).
Coefficient interpolate_in_s(const std::vector<int>& s_values, const std::vector<Coefficient>& values);

// Complex 2n x 2n forms: blocks [[z1, z2], [-z2b, z1b]] and
// [[dz1/2, -dz2/2], [dz2b/2, dz1b/2]] for q = z1 + j z2.
struct QuaternionMatrixPair {
    GeneratorSetPtr gs;
    WeylMatrix Z;
    WeylMatrix D;
};
QuaternionMatrixPair quaternion_pair(std::size_t n);

// det(D) det(Z)^s / det(Z)^(s-1); throws NotDivisible when the division fails
// or leaves a nonconstant quotient.
Coefficient cayley_scalar(std::size_t n, int s);
Coefficient cayley_decomplexified(std::size_t n, int s);
enum class QuaternionForm { complex_form, real_form };
Coefficient cayley_quaternion(QuaternionForm form, std::size_t n, int s);
// d_l1...d_ln [V(l) (l1...ln)^s] / V(l), divided by (l1...ln)^(s-1)
Coefficient radial_quotient(std::size_t n, int s);
// (1/V)(d_l1 + d_l2) V (l1 + l2) for gl_2
Coefficient radial_gl2_example();

VerificationReport quaternion_commutation_check(std::size_t n);
VerificationReport radial_identity(std::size_t n, int s);

// Sweeps the s values, compares each quotient with the expected polynomial and
// interpolates when there are enough points.
VerificationReport run_cayley(const CayleyRunConfig& config);

} // namespace capelli
