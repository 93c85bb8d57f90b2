#include <doctest.h>

#include "capelli/exterior.hpp"
#include "capelli/instances.hpp"
#include "capelli/parse.hpp"
#include "capelli/swapalg.hpp"

using namespace capelli;

namespace {

WeylMatrix weyl_matrix(const char* text, const GeneratorSetPtr& gs) {
    return parse_matrix<WeylElement>(text, WeylElement(gs), weyl_atom(gs));
}

} // namespace

TEST_SUITE("swapalg") {

TEST_CASE("normalize") {
    auto bar_table = psi_phi_table();
    CHECK(parse_swap("psi_bar * psi", bar_table) == -parse_swap("psi * psi_bar", bar_table));
    CHECK(parse_swap("psi_bar * psi", bar_table).to_string() == "-psi*psi_bar");
    CHECK_FALSE(parse_swap("phi * psi", bar_table) == parse_swap("psi * phi", bar_table));

    auto cols = column_commuting_table(2);
    auto sorted = cols->normalize({std::uint8_t(cols->index("M21")), std::uint8_t(cols->index("M11"))});
    REQUIRE(sorted.size() == 1);
    CHECK(sorted[0].first == Word{std::uint8_t(cols->index("M11")), std::uint8_t(cols->index("M21"))});
    CHECK(sorted[0].second == Coefficient(1));
    // different columns of one copy do not commute
    auto kept = cols->normalize({std::uint8_t(cols->index("M12")), std::uint8_t(cols->index("M11"))});
    CHECK(kept[0].first == Word{std::uint8_t(cols->index("M12")), std::uint8_t(cols->index("M11"))});

    auto g = SwapTable::grassmann(2);
    CHECK(g->normalize({0, 0}).empty());
    CHECK(g->normalize({1, 0})[0].second == Coefficient(-1));
}

TEST_CASE("nonconfluent tables are rejected") {
    SwapTable t({"a", "b"});
    t.set_rule(1, 1, {{Word{0, 0}, Coefficient(1)}});
    t.set_rule(1, 0, {});
    CHECK_THROWS_AS(t.check_confluence(), NonConfluentTable);
    CHECK_NOTHROW(psi_phi_nilpotent_table()->check_confluence());
    CHECK_NOTHROW(column_commuting_table(3)->check_confluence());
}

TEST_CASE("nilpotent relations") {
    auto t = psi_phi_nilpotent_table();
    CHECK(parse_swap("psi*psi*psi", t).is_zero());
    CHECK(parse_swap("psi*psi", t) == parse_swap("psi*phi", t));
    CHECK(parse_swap("phi*psi", t) == -parse_swap("psi*phi", t));
    CHECK(parse_swap("phi_bar*phi_bar", t).is_zero());
}

TEST_CASE("bigrade_project") {
    auto t = psi_phi_table();
    auto x = parse_swap("psi*psi_bar + psi*phi", t);
    CHECK(bigrade_project(x, 1, 1) == parse_swap("psi*psi_bar", t));
    CHECK(bigrade_project(parse_swap("psi*phi + 3*phi", t), 0, 2).is_zero());
    auto degs = bidegrees(x);
    CHECK(degs.size() == 2);
}

TEST_CASE("holfactpsi mixed component vanishes under the first conditions") {
    auto t = psi_phi_table();
    auto E = parse_swap("(-2*i)*((psi + psi_bar)/2 + a/2*phi + b/2*phi_bar)"
                        "*((psi - psi_bar)/(2*i) + c/(2*i)*phi + d/(2*i)*phi_bar)"
                        " - (psi + k*phi)*(psi_bar + k*phi_bar)",
                        t);
    auto mixed = bigrade_project(E, 1, 1);
    CHECK_FALSE(mixed.is_zero());
    auto k = Coefficient::parameter("k"), b = Coefficient::parameter("b");
    CHECK(mixed.substitute({{"a", k}, {"c", k}, {"d", b - Coefficient(2) * k}}).is_zero());
    CHECK(mixed.substitute({{"b", k}, {"d", -k}, {"c", Coefficient(2) * k - Coefficient::parameter("a")}}).is_zero());
}

TEST_CASE("ext_mul") {
    auto one = Coefficient(1);
    using X = ExteriorElement<Coefficient>;
    auto p1 = X::generator(2, 0, one), p2 = X::generator(2, 1, one);
    CHECK(p1 * p2 == -(p2 * p1));
    CHECK((p1 * p1).is_zero());

    auto gs = GeneratorSet::make({"x"});
    auto r = WeylElement::derivative(gs, "x"), s = WeylElement::variable(gs, "x");
    using Y = ExteriorElement<WeylElement>;
    auto prod = Y::generator(2, 0, r) * Y::generator(2, 1, s);
    CHECK(prod.coefficient(3) == r * s);
    CHECK_FALSE(prod.coefficient(3) == s * r);
}

TEST_CASE("psi_M") {
    auto gs = GeneratorSet::make({"x", "y"});
    auto id = WeylMatrix::identity(3, WeylElement(gs));
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(psi_M(id, k) == ExteriorElement<WeylElement>::generator(3, k, id.proto().one_like()));

    auto M = weyl_matrix("x, dx, 1; dy, x*y, y; 2, dx*dy, x + dy", gs);
    auto top = psi_product(M);
    CHECK(top == ExteriorElement<WeylElement>::top(3, coldet(M)));

    auto C = weyl_matrix("x, y, 1; y^2, 3, x*y; x, x, y", gs);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            auto a = psi_M(C, i), b = psi_M(C, j);
            CHECK((a * b + b * a).is_zero());
        }
    CHECK_THROWS(psi_M(M, 3));
}

}
