#include "capelli/instances.hpp"

namespace capelli {

std::string to_string(MatrixKind kind) {
    switch (kind) {
    case MatrixKind::plain: return "plain";
    case MatrixKind::symmetric: return "symmetric";
    case MatrixKind::antisymmetric: return "antisymmetric";
    }
    return "?";
}

namespace {

std::string pair_name(std::size_t i, std::size_t j) {
    if (i >= 9 || j >= 9) throw std::invalid_argument("matrix size above 9 is not supported");
    return std::to_string(i + 1) + std::to_string(j + 1);
}

bool independent(MatrixKind kind, std::size_t i, std::size_t j) {
    switch (kind) {
    case MatrixKind::plain: return true;
    case MatrixKind::symmetric: return i <= j;
    case MatrixKind::antisymmetric: return i < j;
    }
    return false;
}

template <class MakeVar, class MakeDer>
CapelliPair fill(MatrixKind kind, std::size_t n, GeneratorSetPtr gs, MakeVar var, MakeDer der) {
    WeylElement zero(gs);
    CapelliPair p{gs, WeylMatrix(n, n, zero), WeylMatrix(n, n, zero)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            switch (kind) {
            case MatrixKind::plain:
                p.Z(i, j) = var(pair_name(i, j));
                p.D(i, j) = der(pair_name(i, j));
                break;
            case MatrixKind::symmetric: {
                std::string b = pair_name(std::min(i, j), std::max(i, j));
                p.Z(i, j) = var(b);
                p.D(i, j) = i == j ? der(b).scaled(Coefficient(2)) : der(b);
                break;
            }
            case MatrixKind::antisymmetric:
                if (i == j) break;
                if (i < j) {
                    p.Z(i, j) = var(pair_name(i, j));
                    p.D(i, j) = der(pair_name(i, j));
                } else {
                    p.Z(i, j) = -var(pair_name(j, i));
                    p.D(i, j) = -der(pair_name(j, i));
                }
                break;
            }
        }
    return p;
}

} // namespace

CapelliPair real_capelli_pair(MatrixKind kind, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (independent(kind, i, j)) names.push_back("x" + pair_name(i, j));
    auto gs = GeneratorSet::make(names);
    return fill(
        kind, n, gs, [&](const std::string& b) { return WeylElement::variable(gs, "x" + b); },
        [&](const std::string& b) { return WeylElement::derivative(gs, "x" + b); });
}

GeneratorSetPtr complex_generators(MatrixKind kind, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (independent(kind, i, j)) {
                names.push_back("x" + pair_name(i, j));
                names.push_back("y" + pair_name(i, j));
            }
    return GeneratorSet::make(names);
}

CapelliPair complex_capelli_pair(MatrixKind kind, std::size_t n) {
    auto gs = complex_generators(kind, n);
    return fill(
        kind, n, gs, [&](const std::string& b) { return complex_pair(gs, b).z; },
        [&](const std::string& b) { return complex_pair(gs, b).dz; });
}

PbwMatrix gl_matrix(const PbwAlgebraPtr& alg, std::size_t n, bool barred) {
    PbwElement zero(alg);
    PbwMatrix E(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            E(i, j) = PbwElement::generator(alg, (barred ? "Eb" : "E") + pair_name(i, j));
    return E;
}

} // namespace capelli
