#include <doctest.h>

#include "capelli/cayley.hpp"

using namespace capelli;

namespace {

Coefficient q(std::int64_t n, std::int64_t d = 1) { return Coefficient(Rational(n, d)); }

} // namespace

TEST_SUITE("cayley") {

TEST_CASE("cayley_scalar") {
    CHECK(cayley_scalar(1, 3) == q(3));
    CHECK(cayley_scalar(2, 1) == q(2));
    CHECK(cayley_scalar(2, 3) == q(12));
    CHECK(cayley_scalar(3, 2) == q(24));
}

TEST_CASE("b polynomial interpolation") {
    auto s = Coefficient::parameter("s");
    CHECK(b_polynomial(3) == s * (s + 1) * (s + 2));
    std::vector<int> pts{1, 2, 3, 4};
    std::vector<Coefficient> vals;
    for (int p : pts) vals.push_back(cayley_scalar(3, p));
    CHECK(interpolate_in_s(pts, vals) == b_polynomial(3));
}

TEST_CASE("cayley_decomplexified") {
    CHECK(cayley_decomplexified(1, 1) == q(1));
    CHECK(cayley_decomplexified(1, 2) == q(4));
    CHECK(cayley_decomplexified(2, 1) == q(4));
    CHECK(cayley_decomplexified(2, 2) == cayley_scalar(2, 2) * cayley_scalar(2, 2));
}

TEST_CASE("quaternion forms") {
    auto r1 = quaternion_commutation_check(1);
    CHECK(r1.residual_is_zero);
    CHECK(r1.details["gaugeMismatches"] == 0);
    CHECK(cayley_quaternion(QuaternionForm::complex_form, 1, 1) == q(1, 2));
    CHECK(cayley_quaternion(QuaternionForm::real_form, 1, 1) == q(3, 4));
    CHECK(cayley_quaternion(QuaternionForm::real_form, 1, 2) == q(15));
}

TEST_CASE("radial identity") {
    CHECK(radial_gl2_example() == q(2));
    CHECK(radial_quotient(3, 2) == q(24));
    CHECK(radial_quotient(1, 4) == q(4));
    CHECK(radial_identity(3, 2).residual_is_zero);
    for (int s = 1; s <= 3; ++s) CHECK(radial_quotient(2, s) == cayley_scalar(2, s));
}

TEST_CASE("run_cayley interpolates the expected polynomial") {
    for (auto kind : {CayleyKind::classical, CayleyKind::radial}) {
        auto r = run_cayley({2, kind, {}});
        CHECK(r.residual_is_zero);
        CHECK(r.details["interpolationMatches"] == true);
    }
    auto d = run_cayley({1, CayleyKind::decomplexified, {}});
    CHECK(d.residual_is_zero);
    CHECK(default_s_values(CayleyKind::classical, 2).size() >= 3);
}

}
