#include <doctest.h>

#include <random>

#include "capelli/instances.hpp"
#include "capelli/matrix.hpp"
#include "capelli/parse.hpp"
#include "capelli/pbw.hpp"

using namespace capelli;

namespace {

Coefficient lam(int i) { return Coefficient::parameter(param::lambda(i)); }

PbwElement random_pbw(const PbwAlgebraPtr& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> gen(0, alg->spec().size() - 1);
    std::uniform_int_distribution<int> len(0, 3), c(-2, 2);
    PbwElement out(alg);
    for (int t = 0; t < 2; ++t) {
        PbwElement term = PbwElement::constant(alg, Coefficient(c(rng)));
        for (int k = len(rng); k > 0; --k) term = term * PbwElement::generator(alg, gen(rng));
        out = out + term;
    }
    return out;
}

} // namespace

TEST_SUITE("pbw") {

TEST_CASE("build_gln") {
    auto g1 = make_pbw_algebra(build_gln(1));
    auto e11 = PbwElement::generator(g1, "E11");
    CHECK(commutator(e11, e11).is_zero());

    auto g2 = make_pbw_algebra(build_gln(2));
    CHECK(commutator(PbwElement::generator(g2, "E12"), PbwElement::generator(g2, "E21")) ==
          parse_pbw("E11 - E22", g2));
    CHECK_NOTHROW(build_gln(3).check_jacobi());
}

TEST_CASE("gl_n basis order puts lowering before Cartan before raising") {
    auto spec = build_gln(2);
    CHECK(spec.index("E21") < spec.index("E11"));
    CHECK(spec.index("E11") < spec.index("E22"));
    CHECK(spec.index("E22") < spec.index("E12"));
}

TEST_CASE("build_doubled_gln") {
    auto alg = make_pbw_algebra(build_doubled_gln(2));
    CHECK(commutator(PbwElement::generator(alg, "E12"), PbwElement::generator(alg, "Eb21")).is_zero());
    CHECK(bar(PbwElement::generator(alg, "E12")) == PbwElement::generator(alg, "Eb12"));
    CHECK(commutator(PbwElement::generator(alg, "Eb12"), PbwElement::generator(alg, "Eb21")) ==
          parse_pbw("Eb11 - Eb22", alg));
    auto x = parse_pbw("i*E12*E21 + 2*Eb11", alg);
    CHECK(bar(bar(x)) == x);
}

TEST_CASE("mul") {
    auto alg = make_pbw_algebra(build_gln(2));
    CHECK(parse_pbw("E12*E21", alg).to_string() == "E21*E12 + E11 - E22");
    auto e11 = PbwElement::generator(alg, "E11");
    CHECK((e11 * e11).terms().size() == 1);
    CHECK((e11 * e11).to_string() == "E11^2");
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        auto a = random_pbw(alg, rng), b = random_pbw(alg, rng), c = random_pbw(alg, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("structure constants from a text table") {
    auto spec = LieAlgebraSpec::from_text("# sl2\nbasis f h e\nbracket e f h 1\nbracket h e e 2\nbracket h f f -2\n");
    CHECK_NOTHROW(spec.check_jacobi());
    auto alg = make_pbw_algebra(spec);
    CHECK(parse_pbw("e*f", alg) == parse_pbw("f*e + h", alg));

    CHECK_THROWS_AS(LieAlgebraSpec::from_text("basis a b c\nbracket a b c 1\nbracket a c a 1\n"),
                    std::invalid_argument);
}

TEST_CASE("hc_eigenvalue") {
    auto g1 = make_pbw_algebra(build_gln(1));
    CHECK(hc_eigenvalue(PbwElement::generator(g1, "E11")) == lam(1));

    auto g2 = make_pbw_algebra(build_gln(2));
    auto E = gl_matrix(g2, 2);
    auto u = Coefficient::parameter("u");
    auto shifted = E + PbwMatrix::diag({Coefficient(1) + u, u}, E.proto());
    CHECK(hc_eigenvalue(coldet(shifted)) == (lam(1) + 1 + u) * (lam(2) + u));

    for (std::size_t n = 1; n <= 3; ++n) {
        auto alg = make_pbw_algebra(build_gln(n));
        auto En = gl_matrix(alg, n);
        std::vector<Coefficient> ds;
        Coefficient expected(1);
        for (std::size_t k = 1; k <= n; ++k) {
            ds.emplace_back(Rational(std::int64_t(n + 1) - 2 * std::int64_t(k), 2));
            expected *= lam(int(k)) + ds.back();
        }
        CHECK(hc_eigenvalue(coldet(En + PbwMatrix::diag(ds, En.proto()))) == expected);
    }
}

TEST_CASE("hc_eigenvalue is multiplicative on central elements") {
    auto alg = make_pbw_algebra(build_gln(2));
    auto E = gl_matrix(alg, 2);
    auto trace = E(0, 0) + E(1, 1);
    auto cap = coldet(E + PbwMatrix::diag(capelli_shifts(2), E.proto()));
    CHECK(hc_eigenvalue(trace * cap) == hc_eigenvalue(trace) * hc_eigenvalue(cap));
}

TEST_CASE("is_central") {
    auto alg = make_pbw_algebra(build_gln(2));
    auto E = gl_matrix(alg, 2);
    auto u = Coefficient::parameter("u");
    auto shifted = coldet(E + PbwMatrix::diag({Coefficient(1) + u, u}, E.proto()));
    for (unsigned e = 0; e <= 2; ++e) CHECK(is_central(shifted.coefficient_of(param::index("u"), e)));
    CHECK_FALSE(is_central(PbwElement::generator(alg, "E12")));
    CHECK(is_central(parse_pbw("E11 + E22", alg)));
}

}
