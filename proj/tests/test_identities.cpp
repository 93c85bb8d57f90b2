#include <doctest.h>

#include "capelli/conditions.hpp"
#include "capelli/identities.hpp"
#include "capelli/instances.hpp"

using namespace capelli;

namespace {

void check_passes(const VerificationReport& r) {
    INFO(r.id << " " << r.params.dump() << " " << r.residual_rendering);
    CHECK(r.residual_is_zero);
    CHECK(r.residual_rendering.empty());
}

} // namespace

TEST_SUITE("identities") {

TEST_CASE("condition checkers on the classical pair") {
    auto p = complex_capelli_pair(MatrixKind::plain, 2);
    CHECK(check_column_commuting(p.Z));
    CHECK(check_manin(p.Z));
    CHECK(check_manin_grassmann(p.Z));
    CHECK(check_bar_commuting<WeylElement>({p.Z}));
    auto Y = p.D.transpose();
    auto Id = WeylMatrix::identity(2, p.Z.proto());
    CHECK(check_css(p.Z, Y, Id));
    CHECK(check_gcss(p.Z, Y, Id));
    CHECK_FALSE(check_css(p.Z, Y, Id.scaled(Coefficient(2))));
    CHECK(check_factorization_relations(p.Z * Y, Id));
}

TEST_CASE("gl_n matrices") {
    auto alg = make_pbw_algebra(build_gln(2));
    auto E = gl_matrix(alg, 2);
    CHECK_FALSE(check_manin(E));
    CHECK_FALSE(check_manin_grassmann(E));
    CHECK(check_factorization_relations(E, PbwMatrix::identity(2, E.proto())));

    auto doubled = make_pbw_algebra(build_doubled_gln(2));
    CHECK(check_bar_commuting<PbwElement>({gl_matrix(doubled, 2)}));
}

TEST_CASE("Turnbull pair satisfies TCSS") {
    auto p = real_capelli_pair(MatrixKind::symmetric, 2);
    auto h = check_tcss(p.Z, p.D);
    REQUIRE(h.has_value());
    CHECK(*h == p.Z.proto().one_like());
}

TEST_CASE("classical Capelli, Turnbull and HUKS") {
    for (std::size_t n = 1; n <= 3; ++n) {
        check_passes(verify_classical_capelli(MatrixKind::plain, n));
        check_passes(verify_classical_capelli(MatrixKind::symmetric, n));
    }
    check_passes(verify_classical_capelli(MatrixKind::antisymmetric, 2));
    CHECK(classical_shifts(MatrixKind::plain, 3) == capelli_shifts(3));
}

TEST_CASE("decomplexified square Capelli") {
    for (auto sign : {CorrSign::plus, CorrSign::minus}) {
        for (std::size_t n = 1; n <= 2; ++n) {
            auto r = verify_decomplexified_capelli(MatrixKind::plain, n, sign);
            check_passes(r);
            CHECK(r.details.contains("rawTransposeResidualIsZero"));
            check_passes(verify_decomplexified_capelli(MatrixKind::symmetric, n, sign));
        }
        check_passes(verify_decomplexified_capelli(MatrixKind::antisymmetric, 2, sign));
    }
}

TEST_CASE("rectangular") {
    for (std::size_t r = 1; r <= 2; ++r) {
        check_passes(verify_rectangular(MatrixKind::plain, 2, r, CorrSign::plus));
        check_passes(verify_rectangular(MatrixKind::symmetric, 2, r, CorrSign::minus));
    }
    auto anti = verify_rectangular(MatrixKind::antisymmetric, 2, 1, CorrSign::plus);
    check_passes(anti);
    CHECK(anti.conditional);
}

TEST_CASE("holomorphic factorization and the main theorem") {
    for (auto sign : {CorrSign::plus, CorrSign::minus}) {
        check_passes(verify_holfact_capelli(1, sign));
        check_passes(verify_holfact_capelli(2, sign));
        check_passes(verify_main_theorem(MainInstance::doubled_gl, 2, sign));
        check_passes(verify_main_theorem(MainInstance::rank_one, 1, sign));
        check_passes(verify_main_theorem(MainInstance::rank_one_zero, 1, sign));
        check_passes(verify_main_theorem(MainInstance::weyl_capelli, 1, sign));
    }
}

TEST_CASE("local factorization") {
    for (int set : {1, 2}) {
        auto r = verify_holfactpsi(set);
        check_passes(r);
        CHECK(r.details["mixedNonzeroWithoutConditions"] == true);
        check_passes(verify_holfactpsi_modanti(set));
    }
    auto plus = verify_coronfact(CorrSign::plus);
    check_passes(plus);
    CHECK(plus.details["defectKind"] == "antiholomorphic");
    CHECK(plus.details["printedDefectMatches"] == false);
    auto minus = verify_coronfact(CorrSign::minus);
    check_passes(minus);
    CHECK(minus.details["defectKind"] == "holomorphic");
}

TEST_CASE("global cancellation") {
    for (std::size_t n = 2; n <= 3; ++n) {
        auto r = verify_holfact_general(n, false);
        check_passes(r);
        for (std::size_t m = 1; m < n; ++m)
            CHECK(r.details["truncatedDefectNonzero_m" + std::to_string(m)] == true);
    }
    check_passes(verify_holfact_general(2, true));
}

TEST_CASE("theor1") {
    for (std::size_t n = 1; n <= 3; ++n) check_passes(verify_theor1(n));
}

TEST_CASE("CSS family") {
    check_passes(verify_css_capelli(CssKind::degenerate, 1, CorrSign::plus));
    for (auto sign : {CorrSign::plus, CorrSign::minus}) {
        check_passes(verify_css_capelli(CssKind::css, 2, sign));
        check_passes(verify_css_capelli(CssKind::tcss, 2, sign));
    }
    check_passes(verify_css_conditions(2));
    check_passes(verify_implications(2));
    check_passes(verify_implications(3));
}

TEST_CASE("center and Harish-Chandra image") {
    check_passes(verify_center(2));
    for (std::size_t n = 1; n <= 3; ++n) check_passes(verify_hc(n));
}

TEST_CASE("reports fail with a rendering") {
    VerificationReport r;
    r.require("ok", true);
    CHECK(r.residual_is_zero);
    r.require("broken", false, "x");
    CHECK_FALSE(r.residual_is_zero);
    CHECK(r.details["broken"] == false);
    CHECK_FALSE(r.residual_rendering.empty());
    CHECK(clip_rendering(std::string(kMaxRendering + 10, 'a')).size() <= kMaxRendering + 3);
}

}
