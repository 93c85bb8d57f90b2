#include <doctest.h>

#include <random>

#include "capelli/coefficient.hpp"
#include "capelli/parse.hpp"

using namespace capelli;

namespace {

Coefficient P(const char* name) { return Coefficient::parameter(name); }
Coefficient q(std::int64_t n, std::int64_t d) { return Coefficient(Rational(n, d)); }

Coefficient random_coefficient(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-3, 3), pick(0, 3);
    const char* names[] = {"s", "k", "a", "u"};
    Coefficient out;
    for (int t = 0; t < 3; ++t) {
        Coefficient term(GaussianRational(Rational(small(rng), 1 + pick(rng)), Rational(small(rng), 2)));
        for (int e = pick(rng); e > 1; --e) term *= P(names[pick(rng)]);
        out += term;
    }
    return out;
}

} // namespace

TEST_SUITE("scalars") {

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational overflow moves to big integers") {
    Rational big(std::int64_t(1) << 62);
    Rational sq = big * big;
    CHECK(sq / big == big);
    CHECK((sq - sq).is_zero());
    CHECK(sq.to_string() == "21267647932558653966460912964485513216");
}

TEST_CASE("add") {
    CHECK(q(1, 2) + q(1, 2) == Coefficient(1));
    CHECK((Coefficient::i() + (-Coefficient::i())).is_zero());
    CHECK(P("s") + P("s") == Coefficient(2) * P("s"));
}

TEST_CASE("mul") {
    CHECK(Coefficient::i() * Coefficient::i() == Coefficient(-1));
    Coefficient m2i(GaussianRational(Rational(0), Rational(-2)));
    Coefficient inv(GaussianRational(m2i.constant_value().inverse()));
    CHECK(inv * m2i == Coefficient(1));
    CHECK(P("s") * (P("s") + 1) == P("s").pow(2) + P("s"));
}

TEST_CASE("bar") {
    Coefficient x = Coefficient(2) + Coefficient(3) * Coefficient::i();
    CHECK(bar(x) == Coefficient(2) - Coefficient(3) * Coefficient::i());
    CHECK(bar(P("s") * Coefficient::i()) == -(P("s") * Coefficient::i()));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto a = random_coefficient(rng), b = random_coefficient(rng);
        CHECK(bar(bar(a)) == a);
        CHECK(bar(a * b) == bar(a) * bar(b));
    }
}

TEST_CASE("substitute") {
    std::map<std::string, Coefficient> ak{{"a", P("k")}, {"c", P("k")}};
    CHECK((P("a") + P("c")).substitute(ak) == Coefficient(2) * P("k"));
    CHECK((P("s") * (P("s") + 1)).substitute(std::map<std::string, Coefficient>{{"s", Coefficient(3)}}) ==
          Coefficient(12));
    std::map<std::string, Coefficient> d{{"d", P("b") - Coefficient(2) * P("k")}};
    CHECK((P("d") - P("b")).substitute(d) == Coefficient(-2) * P("k"));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        auto a = random_coefficient(rng), b = random_coefficient(rng), c = random_coefficient(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("canonical form does not depend on summation order") {
    std::mt19937_64 rng(3);
    std::vector<Coefficient> parts;
    for (int t = 0; t < 12; ++t) parts.push_back(random_coefficient(rng));
    Coefficient forward, backward;
    for (auto& p : parts) forward += p;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) backward += *it;
    CHECK(forward == backward);
    CHECK(forward.to_string() == backward.to_string());
}

TEST_CASE("rendering round-trips through the parser") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        auto a = random_coefficient(rng);
        CHECK(parse_coefficient(a.to_string()) == a);
    }
    CHECK(parse_coefficient("2 + 3*i").to_string() == "2+3i");
    CHECK(parse_coefficient("-2-2i") == Coefficient(GaussianRational(Rational(-2), Rational(-2))));
}

TEST_CASE("polynomial helpers") {
    Coefficient p = (P("s") + 1).pow(3);
    CHECK(p.degree_in(param::index("s")) == 3);
    CHECK(p.coefficient_of(param::index("s"), 1) == Coefficient(3));
    CHECK_THROWS(P("s").constant_value());
    CHECK_THROWS(Coefficient::parameter("nope"));
}

}
