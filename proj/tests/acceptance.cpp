// Acceptance gate: one line per criterion, exit status 1 when any fails.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "capelli/cayley.hpp"
#include "capelli/identities.hpp"

using namespace capelli;

namespace {

struct Gate {
    bool ok = true;
    std::size_t reports = 0;
    std::string first_failure;

    void add(const VerificationReport& r) {
        ++reports;
        if (r.residual_is_zero) return;
        if (ok) first_failure = r.id + " " + r.params.dump() + ": " + r.residual_rendering.substr(0, 160);
        ok = false;
    }
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) first_failure = what;
        ok = false;
    }
};

const CorrSign kSigns[] = {CorrSign::plus, CorrSign::minus};

std::vector<int> with_first_four(std::vector<int> s) {
    for (int v = 1; v <= 4; ++v)
        if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
}

VerificationReport tagged(VerificationReport r, const char* id) {
    if (r.id.empty()) r.id = id;
    return r;
}

void classical(Gate& g) {
    for (std::size_t n = 1; n <= 3; ++n) {
        g.add(tagged(verify_classical_capelli(MatrixKind::plain, n), "capelli.plain"));
        g.add(tagged(verify_classical_capelli(MatrixKind::symmetric, n), "capelli.turnbull"));
    }
    g.add(tagged(verify_classical_capelli(MatrixKind::antisymmetric, 2), "capelli.huks"));
}

void decomplex_plain(Gate& g) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto sign : kSigns) {
            auto r = tagged(verify_decomplexified_capelli(MatrixKind::plain, n, sign), "decomplex.square.plain");
            g.add(r);
            g.expect(r.details.contains("rawTransposeResidualIsZero"), "raw-transpose residual not recorded");
        }
}

void decomplex_sym(Gate& g) {
    for (auto sign : kSigns) {
        for (std::size_t n = 1; n <= 2; ++n)
            g.add(tagged(verify_decomplexified_capelli(MatrixKind::symmetric, n, sign), "decomplex.square.symmetric"));
        g.add(tagged(verify_decomplexified_capelli(MatrixKind::antisymmetric, 2, sign),
                     "decomplex.square.antisymmetric"));
    }
}

void rectangular(Gate& g) {
    for (auto sign : kSigns) {
        for (std::size_t n = 2; n <= 3; ++n)
            for (std::size_t r = 1; r <= 2; ++r) {
                g.add(tagged(verify_rectangular(MatrixKind::plain, n, r, sign), "rect.capelli"));
                g.add(tagged(verify_rectangular(MatrixKind::symmetric, n, r, sign), "rect.turnbull"));
            }
        auto anti = tagged(verify_rectangular(MatrixKind::antisymmetric, 2, 1, sign), "rect.antisym");
        g.add(anti);
        g.expect(anti.conditional, "antisymmetric rectangular report not flagged conditional");
    }
}

void holfact(Gate& g) {
    for (auto sign : kSigns)
        for (std::size_t n = 1; n <= 2; ++n)
            g.add(tagged(verify_holfact_capelli(n, sign), "factorization.holfact_capelli"));
}

void main_theorem(Gate& g) {
    for (int set : {1, 2}) {
        g.add(tagged(verify_holfactpsi(set), "local.holfactpsi"));
        g.add(tagged(verify_holfactpsi_modanti(set), "local.holfactpsi_modanti"));
    }
    for (auto sign : kSigns) {
        g.add(tagged(verify_coronfact(sign), "local.coronfact"));
        auto r = tagged(verify_main_theorem(MainInstance::doubled_gl, 2, sign), "factorization.main");
        g.add(r);
        g.expect(r.details.contains("shifts"), "main theorem shifts not recorded");
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        auto r = tagged(verify_holfact_general(n, false), "local.holfact_general");
        g.add(r);
        for (std::size_t m = 1; m < n; ++m) {
            auto key = "truncatedDefectNonzero_m" + std::to_string(m);
            g.expect(r.details.value(key, false), "truncated defect vanished: n=" + std::to_string(n) + " " + key);
        }
    }
}

void theor1(Gate& g) {
    for (std::size_t n = 2; n <= 3; ++n) g.add(tagged(verify_theor1(n), "factorization.theor1"));
}

void css(Gate& g) {
    for (std::size_t n = 2; n <= 3; ++n) {
        g.add(tagged(verify_css_conditions(n), "css.conditions"));
        g.add(tagged(verify_implications(n), "css.implications"));
    }
    for (auto sign : kSigns) {
        g.add(tagged(verify_css_capelli(CssKind::degenerate, 1, sign), "css.capelli"));
        g.add(tagged(verify_css_capelli(CssKind::css, 2, sign), "css.capelli"));
        g.add(tagged(verify_css_capelli(CssKind::tcss, 2, sign), "css.capelli"));
    }
}

void center(Gate& g) {
    for (std::size_t n = 2; n <= 3; ++n) g.add(tagged(verify_center(n), "center.capelli"));
    for (std::size_t n = 1; n <= 3; ++n) g.add(tagged(verify_hc(n), "center.hc"));
}

void cayley(Gate& g) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto kind : {CayleyKind::classical, CayleyKind::radial}) {
            auto r = run_cayley({n, kind, with_first_four(default_s_values(kind, n))});
            g.add(r);
            g.expect(r.details.value("interpolationMatches", false), "b(s) not reconstructed for n=" + std::to_string(n));
            if (kind == CayleyKind::radial && n == 2)
                g.expect(r.details.value("gl2ExampleIsTwo", false), "gl_2 radial example is not 2");
        }
    for (std::size_t n = 1; n <= 2; ++n) {
        g.add(run_cayley({n, CayleyKind::decomplexified, {}}));
        g.add(quaternion_commutation_check(n));
    }
    for (auto kind : {CayleyKind::quaternion_complex, CayleyKind::quaternion_real})
        g.add(run_cayley({1, kind, with_first_four(default_s_values(kind, 1))}));
    g.expect(cayley_quaternion(QuaternionForm::real_form, 1, 1) == Coefficient(Rational(3, 4)),
             "real-form quotient at s=1 is not 3/4");
}

void oracles(Gate& g) {
    g.add(oracle_coldet_algorithms(1, 200));
    g.add(oracle_top_form(2, 100));
    g.add(oracle_decomplexify(3, 100));
    g.add(oracle_weyl_action(4, 200));
    g.add(oracle_kernels(5, 50));
}

struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<void(Gate&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "classical Capelli, Turnbull n=1..3, HUKS n=2", 5, classical},
        {2, "decomplexified square Capelli n=1..3, both signs", 300, decomplex_plain},
        {3, "decomplexified symmetric n=1,2 and antisymmetric n=2", 30, decomplex_sym},
        {4, "rectangular Capelli and Turnbull n=2,3, r=1,2; antisymmetric conditional", 120, rectangular},
        {5, "holomorphic factorization in U(gl_n + gl_n), n=1,2", 10, holfact},
        {6, "local factorization, doubled gl_2 instance, truncated defects", 10, main_theorem},
        {7, "weak factorization n=2,3", 10, theor1},
        {8, "CSS conditions, implications and decomplexified CSS Capelli", 30, css},
        {9, "central Capelli coefficients and Harish-Chandra image", 30, center},
        {10, "Cayley family", 60, cayley},
        {11, "cross-engine oracles", 60, oracles},
    };

    int failed = 0;
    for (auto& c : criteria) {
        Gate g;
        Stopwatch watch;
        try {
            c.run(g);
        } catch (const std::exception& e) {
            g.expect(false, std::string("exception: ") + e.what());
        }
        double seconds = watch.millis() / 1000.0;
        g.expect(seconds <= c.limit_seconds, "over the time limit");
        std::printf("criterion %2d %s  %7.2f s (limit %g s)  %zu reports  %s\n", c.number, g.ok ? "PASS" : "FAIL",
                    seconds, c.limit_seconds, g.reports, c.title);
        if (!g.ok) {
            std::printf("             %s\n", g.first_failure.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
