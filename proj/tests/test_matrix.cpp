#include <doctest.h>

#include <memory>

#include "capelli/instances.hpp"
#include "capelli/matrix.hpp"
#include "capelli/parse.hpp"
#include "capelli/swapalg.hpp"

using namespace capelli;

namespace {

GeneratorSetPtr complex_gs() { return GeneratorSet::make({"x11", "y11", "x12", "y12", "x21", "y21", "x22", "y22"}); }

WeylMatrix weyl_matrix(const char* text, const GeneratorSetPtr& gs) {
    return parse_matrix<WeylElement>(text, WeylElement(gs), weyl_atom(gs));
}

} // namespace

TEST_SUITE("matrixops") {

TEST_CASE("coldet takes first-column factors first") {
    auto free4 = std::make_shared<SwapTable>(std::vector<std::string>{"a", "b", "c", "d"});
    auto proto = SwapElement(free4);
    auto M = parse_matrix<SwapElement>("a, b; c, d", proto, swap_atom(free4));
    CHECK(coldet(M) == parse_swap("a*d - c*b", free4));
    CHECK(coldet_laplace(M) == coldet(M));

    auto gs = GeneratorSet::make({"x"});
    CHECK(coldet(WeylMatrix::identity(4, WeylElement(gs))) == WeylElement(gs).one_like());
    CHECK(coldet(weyl_matrix("x, dx; 1, x", gs)) == parse_weyl("x^2 - dx", gs));
    CHECK_THROWS_AS(coldet(WeylMatrix(2, 3, WeylElement(gs))), std::invalid_argument);
}

TEST_CASE("coldet_laplace agrees with the permutation expansion") {
    auto gs = GeneratorSet::make({"x", "y"});
    auto M = weyl_matrix("x, dx, 1; dy, x*y, y; 2, dx*dy, x + dy", gs);
    CHECK(coldet_laplace(M) == coldet(M));
    CHECK(coldet_laplace(WeylMatrix::identity(3, WeylElement(gs))) == WeylElement(gs).one_like());

    auto alg = make_pbw_algebra(build_gln(2));
    auto E = gl_matrix(alg, 2);
    auto big = PbwMatrix(4, 4, E.proto());
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) big(r, c) = E(r % 2, (r + c) % 2) + constant_like(E.proto(), Coefficient(int(r + c) % 3));
    CHECK(coldet_laplace(big) == coldet(big));
}

TEST_CASE("parallel coldet matches the serial reference") {
    auto pair = real_capelli_pair(MatrixKind::plain, 3);
    auto M = pair.Z * pair.D.transpose();
    CHECK(coldet(M, 3) == coldet_serial(M));
}

TEST_CASE("commutative coldet is the ordinary determinant") {
    auto gs = GeneratorSet::make({"x", "y"});
    auto M = weyl_matrix("x, y; y^2, 3", gs);
    CHECK(coldet(M) == coldet(M.transpose()));
}

TEST_CASE("decomplexify") {
    auto gs = GeneratorSet::make({"x11", "y11"});
    auto [z, dz] = complex_pair(gs, "11");
    WeylMatrix Z(1, 1, z), D(1, 1, z);
    Z(0, 0) = z;
    D(0, 0) = dz;
    CHECK(decomplexify(Z) == weyl_matrix("x11, y11; -y11, x11", gs));
    CHECK(decomplexify(D) == weyl_matrix("dx11/2, -dy11/2; dy11/2, dx11/2", gs));

    auto cgs = complex_gs();
    auto M = weyl_matrix("x11 + i*y12, dx21; 2*i, x22*dy11", cgs);
    auto N = weyl_matrix("dy22 - i*x12, 1; y21, x11*x22 + i", cgs);
    CHECK(decomplexify(M * N) == decomplexify(M) * decomplexify(N));
    CHECK(decomplexify(M + N) == decomplexify(M) + decomplexify(N));
    CHECK(decomplexify(WeylMatrix::identity(2, WeylElement(cgs))) == WeylMatrix::identity(4, WeylElement(cgs)));
    CHECK(decomplexify(M).transpose() == decomplexify(bar_entries(M).transpose()));
}

TEST_CASE("corr_tridiag") {
    Coefficient q(Rational(1, 4)), iq(GaussianRational(Rational(0), Rational(1, 4)));
    auto one = corr_tridiag<Coefficient>({Coefficient(0)}, CorrSign::plus, Coefficient(0));
    CHECK(one(0, 0) == q);
    CHECK(one(0, 1) == iq);
    CHECK(one(1, 0) == iq);
    CHECK(one(1, 1) == -q);

    auto two = corr_tridiag<Coefficient>({Coefficient(1), Coefficient(0)}, CorrSign::plus, Coefficient(0));
    CHECK(two(0, 0) == Coefficient(Rational(5, 4)));
    CHECK(two(1, 1) == Coefficient(Rational(3, 4)));
    CHECK(two(2, 2) == q);
    CHECK(two(3, 3) == -q);
    CHECK(two(0, 2).is_zero());

    auto d = Coefficient::parameter("d");
    for (auto sign : {CorrSign::plus, CorrSign::minus}) {
        auto block = corr_tridiag<Coefficient>({d}, sign, Coefficient(0));
        CHECK(coldet(block) == d * d);
    }
    auto minus = corr_tridiag<Coefficient>({d}, CorrSign::minus, Coefficient(0));
    auto plus = corr_tridiag<Coefficient>({d}, CorrSign::plus, Coefficient(0));
    CHECK(minus == plus.map([](const Coefficient& c) { return bar(c); }));
}

TEST_CASE("submatrix and multi-indexes") {
    auto gs = GeneratorSet::make({"x", "y"});
    auto M = weyl_matrix("x, y, 1; 2, dx, dy; x*y, 3, y", gs);
    CHECK(M.submatrix({0, 1, 2}, {0, 1, 2}) == M);
    CHECK(M.submatrix({1}, {2})(0, 0) == M(1, 2));
    CHECK(M.submatrix({0, 2}, {1, 2}) == weyl_matrix("y, 1; 3, y", gs));
    CHECK(double_index({0, 2}) == MultiIndex{0, 1, 4, 5});
    CHECK(subsets(4, 2).size() == 6);
    CHECK_THROWS_AS(M.submatrix({3}, {0}), std::out_of_range);
}

TEST_CASE("diag, transpose, matmul") {
    auto gs = GeneratorSet::make({"x", "y"});
    auto M = weyl_matrix("x, dx; dy, y", gs);
    CHECK(M.transpose().transpose() == M);
    CHECK(WeylMatrix::identity(2, M.proto()) * M == M);
    auto D = WeylMatrix::diag({Coefficient(2), Coefficient(3)}, M.proto());
    CHECK((D * M)(1, 0) == M(1, 0).scaled(Coefficient(3)));
    // entries multiply in written order
    CHECK((M * M)(0, 0) == M(0, 0) * M(0, 0) + M(0, 1) * M(1, 0));
    CHECK_THROWS_AS(M * WeylMatrix(3, 1, M.proto()), std::invalid_argument);
}

}
