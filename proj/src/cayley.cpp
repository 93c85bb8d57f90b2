#include "capelli/cayley.hpp"

#include <algorithm>


namespace capelli {

namespace {

Coefficient s_param() { return Coefficient::parameter("s"); }

Coefficient at(const Coefficient& poly, int s) { return poly.substitute(std::map<std::string, Coefficient>{{"s", Coefficient(s)}}); }

bool entries_commute(const WeylMatrix& M) {
    auto& e = M.entries();
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b)
            if (!commutator(e[a], e[b]).is_zero()) return false;
    return true;
}

// operator det(D) applied to det(Z)^s, divided by det(Z)^(s-1)
Coefficient cayley_quotient(const WeylMatrix& Z, const WeylMatrix& D, int s) {
    if (s < 1) throw std::invalid_argument("s must be a positive integer");
    if (!entries_commute(D)) throw std::invalid_argument("operator entries do not commute");
    auto detZ = coldet(Z);
    auto op = coldet(D);
    auto prev = detZ.pow(unsigned(s - 1));
    auto image = apply(op, prev * detZ);
    auto q = exact_divide(image, prev);
    if (!q.is_constant()) throw NotDivisible("quotient is not constant: " + q.to_string());
    return q.constant_term();
}

Coefficient product_of_shifts(std::size_t count, const Coefficient& scale, std::int64_t offset) {
    // prod_{k < count} (scale*s + offset + k)
    Coefficient out(1);
    for (std::size_t k = 0; k < count; ++k) out = out * (scale * s_param() + Coefficient(offset + std::int64_t(k)));
    return out;
}

GeneratorSetPtr lambda_generators(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("l" + std::to_string(i));
    return GeneratorSet::make(names);
}

WeylElement vandermonde(const GeneratorSetPtr& gs, std::size_t n) {
    WeylElement v = WeylElement::constant(gs, Coefficient(1));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            v = v * (WeylElement::variable(gs, "l" + std::to_string(i)) - WeylElement::variable(gs, "l" + std::to_string(j)));
    return v;
}

} // namespace

std::string to_string(CayleyKind kind) {
    switch (kind) {
    case CayleyKind::classical: return "classical";
    case CayleyKind::decomplexified: return "decomplexified";
    case CayleyKind::quaternion_complex: return "quaternion-complex";
    case CayleyKind::quaternion_real: return "quaternion-real";
    case CayleyKind::radial: return "radial";
    }
    return "?";
}

Coefficient b_polynomial(std::size_t n) { return product_of_shifts(n, Coefficient(1), 0); }

Coefficient cayley_expected(CayleyKind kind, std::size_t n) {
    switch (kind) {
    case CayleyKind::classical:
    case CayleyKind::radial: return b_polynomial(n);
    case CayleyKind::decomplexified: return b_polynomial(n) * b_polynomial(n);
    case CayleyKind::quaternion_complex:
        return product_of_shifts(2 * n, Coefficient(1), 0).scaled(Coefficient(Rational(1, 4)).pow(unsigned(n)));
    case CayleyKind::quaternion_real:
        // (2s-1)(2s)^2(2s+1)^2...(2s+2n-2)^2(2s+2n-1) / 2^(4n)
        return (product_of_shifts(2 * n, Coefficient(2), -1) * product_of_shifts(2 * n, Coefficient(2), 0))
            .scaled(Coefficient(Rational(1, 16)).pow(unsigned(n)));
    }
    throw std::invalid_argument("unknown Cayley kind");
}

std::vector<int> default_s_values(CayleyKind kind, std::size_t n) {
    int degree = cayley_expected(kind, n).degree_in(param::index("s"));
    int top = std::max(int(n) + 2, degree + 1);
    std::vector<int> out;
    for (int s = 1; s <= top; ++s) out.push_back(s);
    return out;
}

Coefficient interpolate_in_s(const std::vector<int>& s_values, const std::vector<Coefficient>& values) {
    if (s_values.size() != values.size()) throw std::invalid_argument("interpolation size mismatch");
    Coefficient out;
    for (std::size_t j = 0; j < s_values.size(); ++j) {
        Coefficient basis(1);
        for (std::size_t m = 0; m < s_values.size(); ++m) {
            if (m == j) continue;
            if (s_values[m] == s_values[j]) throw std::invalid_argument("repeated interpolation point");
            basis = basis * (s_param() - Coefficient(s_values[m])) * Coefficient(Rational(1, s_values[j] - s_values[m]));
        }
        out = out + basis * values[j];
    }
    return out;
}

QuaternionMatrixPair quaternion_pair(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (auto* part : {"a", "b"}) {
                std::string base = part + std::to_string(i) + std::to_string(j);
                names.push_back("x" + base);
                names.push_back("y" + base);
            }
    auto gs = GeneratorSet::make(names);
    WeylElement zero(gs);
    QuaternionMatrixPair out{gs, WeylMatrix(2 * n, 2 * n, zero), WeylMatrix(2 * n, 2 * n, zero)};
    Coefficient half(Rational(1, 2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
            auto q1 = complex_pair(out.gs, "a" + ij), q2 = complex_pair(out.gs, "b" + ij);
            std::size_t r = 2 * i, c = 2 * j;
            out.Z(r, c) = q1.z;
            out.Z(r, c + 1) = q2.z;
            out.Z(r + 1, c) = -bar(q2.z);
            out.Z(r + 1, c + 1) = bar(q1.z);
            out.D(r, c) = q1.dz.scaled(half);
            out.D(r, c + 1) = q2.dz.scaled(-half);
            out.D(r + 1, c) = bar(q2.dz).scaled(half);
            out.D(r + 1, c + 1) = bar(q1.dz).scaled(half);
        }
    return out;
}

Coefficient cayley_scalar(std::size_t n, int s) {
    auto p = real_capelli_pair(MatrixKind::plain, n);
    return cayley_quotient(p.Z, p.D, s);
}

Coefficient cayley_decomplexified(std::size_t n, int s) {
    auto p = complex_capelli_pair(MatrixKind::plain, n);
    return cayley_quotient(decomplexify(p.Z), decomplexify(p.D), s);
}

Coefficient cayley_quaternion(QuaternionForm form, std::size_t n, int s) {
    auto p = quaternion_pair(n);
    if (form == QuaternionForm::complex_form) return cayley_quotient(p.Z, p.D, s);
    return cayley_quotient(decomplexify(p.Z), decomplexify(p.D), s);
}

Coefficient radial_quotient(std::size_t n, int s) {
    if (s < 1) throw std::invalid_argument("s must be a positive integer");
    auto gs = lambda_generators(n);
    auto V = vandermonde(gs, n);
    WeylElement lam = WeylElement::constant(gs, Coefficient(1)), op = lam;
    for (std::size_t i = 1; i <= n; ++i) {
        lam = lam * WeylElement::variable(gs, "l" + std::to_string(i));
        op = op * WeylElement::derivative(gs, "l" + std::to_string(i));
    }
    auto prev = lam.pow(unsigned(s - 1));
    auto q = exact_divide(exact_divide(apply(op, V * prev * lam), V), prev);
    if (!q.is_constant()) throw NotDivisible("radial quotient is not constant: " + q.to_string());
    return q.constant_term();
}

Coefficient radial_gl2_example() {
    auto gs = lambda_generators(2);
    auto l1 = WeylElement::variable(gs, "l1"), l2 = WeylElement::variable(gs, "l2");
    auto V = vandermonde(gs, 2);
    auto op = WeylElement::derivative(gs, "l1") + WeylElement::derivative(gs, "l2");
    auto q = exact_divide(apply(op, V * (l1 + l2)), V);
    if (!q.is_constant()) throw NotDivisible("gl_2 example is not constant: " + q.to_string());
    return q.constant_term();
}

VerificationReport quaternion_commutation_check(std::size_t n) {
    Stopwatch clock;
    VerificationReport rep;
    rep.id = "cayley.quaternion_commutation";
    rep.identity_name = "commutation table of the quaternionic complex forms";
    rep.host_ring = "weyl";
    rep.params["n"] = n;
    auto p = quaternion_pair(n);
    std::size_t m = 2 * n;
    // G = diag(1, -1, 1, -1, ...)
    auto sign = [](std::size_t k) { return Coefficient(k % 2 ? -1 : 1); };
    std::size_t literal_mismatches = 0, gauge_mismatches = 0, checked = 0;
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = 0; s < m; ++s) {
                    Coefficient delta((u == r && v == s) ? 1 : 0);
                    auto two_d = p.D(r, s).scaled(Coefficient(2));
                    auto literal = commutator(p.Z(u, v), two_d);
                    if (!(literal == constant_like(literal, delta))) ++literal_mismatches;
                    auto gauged = commutator(two_d.scaled(sign(r) * sign(s)), p.Z(u, v));
                    if (!(gauged == constant_like(gauged, delta))) {
                        if (gauge_mismatches++ == 0)
                            rep.fail("entry u=" + std::to_string(u + 1) + " v=" + std::to_string(v + 1) +
                                     " r=" + std::to_string(r + 1) + " s=" + std::to_string(s + 1) + ": " +
                                     gauged.to_string());
                    }
                    ++checked;
                }
    rep.details["checked"] = checked;
    rep.details["gaugeMismatches"] = gauge_mismatches;
    rep.details["literalMismatches"] = literal_mismatches;
    rep.require("zEntriesCommute", entries_commute(p.Z));
    rep.require("dEntriesCommute", entries_commute(p.D));
    rep.wall_millis = clock.millis();
    return rep;
}

VerificationReport radial_identity(std::size_t n, int s) {
    Stopwatch clock;
    VerificationReport rep;
    rep.id = "cayley.radial";
    rep.identity_name = "radial part of the Cayley identity";
    rep.host_ring = "weyl";
    rep.params["n"] = n;
    rep.params["s"] = s;
    try {
        auto q = radial_quotient(n, s);
        auto expected = at(b_polynomial(n), s);
        rep.details["quotient"] = q.to_string();
        rep.details["expected"] = expected.to_string();
        if (!(q == expected)) rep.fail("quotient " + q.to_string() + " expected " + expected.to_string());
    } catch (const NotDivisible& e) {
        rep.fail(e.what());
    }
    rep.wall_millis = clock.millis();
    return rep;
}

VerificationReport run_cayley(const CayleyRunConfig& config) {
    Stopwatch clock;
    VerificationReport rep;
    std::size_t n = config.n;
    auto kind = config.kind;
    rep.id = "cayley." + std::string(kind == CayleyKind::quaternion_complex ? "quaternion_complex"
                                     : kind == CayleyKind::quaternion_real  ? "quaternion_real"
                                                                            : to_string(kind));
    rep.identity_name = "Cayley identity (" + to_string(kind) + ")";
    rep.host_ring = "weyl";
    rep.params["n"] = n;
    auto svals = config.s_values.empty() ? default_s_values(kind, n) : config.s_values;
    std::vector<int> sorted = svals;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1)
        throw std::invalid_argument("s values must be distinct positive integers");
    rep.params["sValues"] = svals;

    std::vector<Coefficient> quotients(svals.size());
    std::vector<std::string> errors(svals.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < svals.size(); ++k) {
        try {
            int s = svals[k];
            switch (kind) {
            case CayleyKind::classical: quotients[k] = cayley_scalar(n, s); break;
            case CayleyKind::decomplexified: quotients[k] = cayley_decomplexified(n, s); break;
            case CayleyKind::quaternion_complex:
                quotients[k] = cayley_quaternion(QuaternionForm::complex_form, n, s);
                break;
            case CayleyKind::quaternion_real: quotients[k] = cayley_quaternion(QuaternionForm::real_form, n, s); break;
            case CayleyKind::radial: quotients[k] = radial_quotient(n, s); break;
            }
        } catch (const std::exception& e) {
            errors[k] = e.what();
        }
    }

    auto expected = cayley_expected(kind, n);
    Json table = Json::array();
    bool all_ok = true;
    for (std::size_t k = 0; k < svals.size(); ++k) {
        auto want = at(expected, svals[k]);
        Json row{{"n", n}, {"s", svals[k]}, {"expected", want.to_string()}};
        if (!errors[k].empty()) {
            row["error"] = errors[k];
            rep.fail("s=" + std::to_string(svals[k]) + ": " + errors[k]);
            all_ok = false;
        } else {
            row["quotient"] = quotients[k].to_string();
            bool ok = quotients[k] == want;
            row["match"] = ok;
            if (!ok) rep.fail("s=" + std::to_string(svals[k]) + ": " + quotients[k].to_string() + " != " + want.to_string());
        }
        table.push_back(row);
    }
    rep.details["results"] = table;
    rep.details["expected"] = expected.to_string();

    int degree = expected.degree_in(param::index("s"));
    if (all_ok && int(svals.size()) >= degree + 1) {
        auto poly = interpolate_in_s(svals, quotients);
        rep.details["interpolated"] = poly.to_string();
        rep.require("interpolationMatches", poly == expected, poly.to_string());
    } else {
        rep.details["interpolated"] = nullptr;
    }
    if (kind == CayleyKind::radial && n == 2) {
        auto ex = radial_gl2_example();
        rep.details["gl2Example"] = ex.to_string();
        rep.require("gl2ExampleIsTwo", ex == Coefficient(2));
    }
    rep.lhs_term_count = svals.size();
    rep.rhs_term_count = svals.size();
    rep.wall_millis = clock.millis();
    return rep;
}

} // namespace capelli
