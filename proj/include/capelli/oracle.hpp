#pragma once

#include <string>
#include <vector>

#include "capelli/matrix.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

// All monomials of total degree <= deg in the variables of gs.
std::vector<WeylElement> monomials_up_to(const GeneratorSetPtr& gs, unsigned deg);

// Action of coldet(M) on p computed entry by entry: the products of the
// column expansion are never formed, each entry acts on the result of the
// later columns.
WeylElement apply_coldet(const RingMatrix<WeylElement>& M, const WeylElement& p);

// Outcome of comparing two operator actions on a set of test polynomials.
struct ActionCheck {
    bool agree = true;
    std::size_t tested = 0;
    std::string first_mismatch;
};

// Compares apply_coldet(M) against apply_coldet(A) after apply_coldet(B)
// (the action of coldet(A) coldet(B)) and against the normal-ordered lhs
// operator, on every monomial of degree <= deg.
ActionCheck check_action(const RingMatrix<WeylElement>& M, const WeylElement& lhs_operator,
                         const std::vector<RingMatrix<WeylElement>>& rhs_factors, unsigned deg = 2);

} // namespace capelli
