#include <random>

#include "capelli/exterior.hpp"
#include "capelli/identities.hpp"
#include "capelli/oracle.hpp"

namespace capelli {

namespace {

using Rng = std::mt19937_64;

int small_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Sum of up to three terms c * g1 * g2 with small integer (or Gaussian) c.
template <Ring R>
R random_element(Rng& rng, const std::vector<R>& gens, const R& proto, bool gaussian = false) {
    R out = proto.zero_like();
    int terms = small_int(rng, 0, 3);
    for (int t = 0; t < terms; ++t) {
        Coefficient c(small_int(rng, -3, 3));
        if (gaussian) c = c + Coefficient(small_int(rng, -2, 2)) * Coefficient::i();
        R term = constant_like(proto, c);
        int len = small_int(rng, 0, 2);
        for (int k = 0; k < len; ++k) term = term * gens[std::size_t(small_int(rng, 0, int(gens.size()) - 1))];
        out = out + term;
    }
    return out;
}

template <Ring R>
RingMatrix<R> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const std::vector<R>& gens, const R& proto,
                            bool gaussian = false) {
    RingMatrix<R> M(rows, cols, proto);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = random_element(rng, gens, proto, gaussian);
    return M;
}

struct Engines {
    GeneratorSetPtr gs = GeneratorSet::make({"x", "y"});
    std::vector<WeylElement> weyl;
    PbwAlgebraPtr alg = make_pbw_algebra(build_gln(2));
    std::vector<PbwElement> pbw;
    SwapTablePtr table = psi_phi_table();
    std::vector<SwapElement> swap;
    std::vector<Coefficient> coeff;

    Engines() {
        for (auto& v : {"x", "y"}) {
            weyl.push_back(WeylElement::variable(gs, v));
            weyl.push_back(WeylElement::derivative(gs, v));
        }
        for (std::size_t g = 0; g < alg->spec().size(); ++g) pbw.push_back(PbwElement::generator(alg, g));
        for (std::size_t k = 0; k < table->size(); ++k) swap.push_back(SwapElement::letter(table, k));
        for (auto& p : {"a", "b", "c"}) coeff.push_back(Coefficient::parameter(p));
    }
};

struct Tally {
    std::size_t tested = 0;
    std::size_t failed = 0;
    void record(VerificationReport& rep, bool ok, const std::string& what) {
        ++tested;
        if (!ok) {
            ++failed;
            rep.fail(what);
        }
    }
    void write(VerificationReport& rep) const {
        rep.details["tested"] = tested;
        rep.details["failed"] = failed;
    }
};

VerificationReport oracle_report(const std::string& id, const std::string& name, std::uint64_t seed,
                                 std::size_t count) {
    VerificationReport rep;
    rep.id = id;
    rep.identity_name = name;
    rep.host_ring = "mixed";
    rep.params["seed"] = seed;
    rep.params["count"] = count;
    return rep;
}

} // namespace

VerificationReport oracle_coldet_algorithms(std::uint64_t seed, std::size_t count) {
    Stopwatch clock;
    auto rep = oracle_report("oracle.coldet", "permutation and subset column determinants agree", seed, count);
    Rng rng(seed);
    Engines e;
    Tally tally;
    auto check = [&]<Ring R>(const std::vector<R>& gens, const R& proto, const char* engine) {
        std::size_t n = std::size_t(small_int(rng, 1, 4));
        auto M = random_matrix(rng, n, n, gens, proto);
        tally.record(rep, coldet(M) == coldet_laplace(M), std::string(engine) + " n=" + std::to_string(n));
    };
    for (std::size_t t = 0; t < count; ++t) {
        switch (t % 4) {
        case 0: check(e.weyl, WeylElement(e.gs), "weyl"); break;
        case 1: check(e.pbw, PbwElement(e.alg), "pbw"); break;
        case 2: check(e.swap, SwapElement(e.table), "swap"); break;
        default: check(e.coeff, Coefficient(), "coefficient"); break;
        }
    }
    tally.write(rep);
    rep.wall_millis = clock.millis();
    return rep;
}

VerificationReport oracle_top_form(std::uint64_t seed, std::size_t count) {
    Stopwatch clock;
    auto rep = oracle_report("oracle.top_form", "top exterior coefficient equals the column determinant", seed, count);
    rep.host_ring = "exterior(weyl)";
    Rng rng(seed);
    Engines e;
    WeylElement proto(e.gs);
    using Ext = ExteriorElement<WeylElement>;
    Tally tally;
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t n = std::size_t(small_int(rng, 1, 3));
        auto M = random_matrix(rng, n, n, e.weyl, proto);
        auto top = psi_product(M);
        bool only_top = top.term_count() <= 1 && (top.is_zero() || top.terms().begin()->first == Ext::full_mask(n));
        tally.record(rep, only_top && top.coefficient(Ext::full_mask(n)) == coldet(M), "n=" + std::to_string(n));
    }
    tally.write(rep);
    rep.wall_millis = clock.millis();
    return rep;
}

VerificationReport oracle_decomplexify(std::uint64_t seed, std::size_t count) {
    Stopwatch clock;
    auto rep = oracle_report("oracle.decomplexify", "decomplexification is a ring homomorphism", seed, count);
    Rng rng(seed);
    auto gs = complex_generators(MatrixKind::plain, 1);
    auto zp = complex_pair(gs, "11");
    std::vector<WeylElement> gens{zp.z, zp.dz, bar(zp.z), bar(zp.dz)};
    WeylElement proto(gs);
    Tally tally;
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t n = std::size_t(small_int(rng, 1, 3));
        auto A = random_matrix(rng, n, n, gens, proto, true);
        auto B = random_matrix(rng, n, n, gens, proto, true);
        bool ok = decomplexify(A * B) == decomplexify(A) * decomplexify(B) &&
                  decomplexify(A + B) == decomplexify(A) + decomplexify(B);
        tally.record(rep, ok, "n=" + std::to_string(n));
    }
    tally.write(rep);
    rep.wall_millis = clock.millis();
    return rep;
}

VerificationReport oracle_weyl_action(std::uint64_t seed, std::size_t count) {
    Stopwatch clock;
    auto rep = oracle_report("oracle.weyl_action", "operator product acts as composition", seed, count);
    Rng rng(seed);
    Engines e;
    WeylElement proto(e.gs);
    auto polys = monomials_up_to(e.gs, 3);
    Tally tally;
    for (std::size_t t = 0; t < count; ++t) {
        auto a = random_element(rng, e.weyl, proto);
        auto b = random_element(rng, e.weyl, proto);
        auto p = polys[std::size_t(small_int(rng, 0, int(polys.size()) - 1))];
        tally.record(rep, apply(a * b, p) == apply(a, apply(b, p)), "a=" + a.to_string() + " b=" + b.to_string());
    }
    tally.write(rep);
    rep.wall_millis = clock.millis();
    return rep;
}

VerificationReport oracle_kernels(std::uint64_t seed, std::size_t count) {
    Stopwatch clock;
    auto rep = oracle_report("oracle.kernels", "parallel kernels match the serial references", seed, count);
    Rng rng(seed);
    Engines e;
    WeylElement proto(e.gs);
    Tally tally;
    for (std::size_t t = 0; t < count; ++t) {
        // three threads and no size threshold, so the split path runs on any machine
        auto a = random_element(rng, e.weyl, proto) * random_element(rng, e.weyl, proto);
        auto b = random_element(rng, e.weyl, proto) * random_element(rng, e.weyl, proto);
        tally.record(rep, mul_serial(a, b) == mul_parallel(a, b, 3, 0), "mul");
        std::size_t n = std::size_t(small_int(rng, 1, 4));
        auto M = random_matrix(rng, n, n, e.weyl, proto);
        tally.record(rep, coldet_serial(M) == coldet(M, 3), "coldet n=" + std::to_string(n));
    }
    tally.write(rep);
    rep.wall_millis = clock.millis();
    return rep;
}

} // namespace capelli
