#pragma once

#include <memory>
#include <string>

#include "capelli/matrix.hpp"
#include "capelli/pbw.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

enum class MatrixKind { plain, symmetric, antisymmetric };

std::string to_string(MatrixKind kind);

using WeylMatrix = RingMatrix<WeylElement>;
using PbwMatrix = RingMatrix<PbwElement>;

// Z with variable entries and D with the matching derivatives. Symmetric: one
// variable per i <= j and 2*d on the diagonal of D. Antisymmetric: one variable
// per i < j, placed with a minus sign below the diagonal in both matrices.
struct CapelliPair {
    GeneratorSetPtr gs;
    WeylMatrix Z;
    WeylMatrix D;
};

// Real variables x_ij.
CapelliPair real_capelli_pair(MatrixKind kind, std::size_t n);
// Complex variables z_ij = x_ij + i*y_ij with dz = (dx - i*dy)/2.
CapelliPair complex_capelli_pair(MatrixKind kind, std::size_t n);
// Weyl algebra over x_ij, y_ij for the index pattern of kind.
GeneratorSetPtr complex_generators(MatrixKind kind, std::size_t n);

// Generic matrix of gl_n generators E_ij (or the barred copy).
PbwMatrix gl_matrix(const PbwAlgebraPtr& alg, std::size_t n, bool barred = false);

} // namespace capelli
