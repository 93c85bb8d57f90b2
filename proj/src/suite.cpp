#include "capelli/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "capelli/cayley.hpp"
#include "capelli/identities.hpp"

namespace capelli {

namespace {

struct PlanContext {
    std::size_t max_n;
    std::vector<CorrSign> signs;
};

using Planner = std::function<void(const PlanContext&, std::vector<Job>&)>;

Json sized(std::initializer_list<std::pair<const char*, Json>> kv) {
    Json j = Json::object();
    for (auto& [k, v] : kv) j[k] = v;
    return j;
}

void add(std::vector<Job>& jobs, const std::string& id, Json params, std::function<VerificationReport()> run) {
    jobs.push_back({id, std::move(params), std::move(run)});
}

// n from lo to min(hi, max_n)
std::vector<std::size_t> sizes(const PlanContext& ctx, std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t n = lo; n <= std::min(hi, ctx.max_n); ++n) out.push_back(n);
    return out;
}

Planner classical(MatrixKind kind) {
    return [kind](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto n : sizes(ctx, 1, 3)) {
            if (kind == MatrixKind::antisymmetric && n % 2) continue;
            add(jobs, "", sized({{"n", n}}), [=] { return verify_classical_capelli(kind, n); });
        }
    };
}

Planner decomplexified(MatrixKind kind) {
    return [kind](const PlanContext& ctx, std::vector<Job>& jobs) {
        std::size_t cap = kind == MatrixKind::antisymmetric ? 2 : 3;
        for (auto n : sizes(ctx, 1, cap)) {
            if (kind == MatrixKind::antisymmetric && n % 2) continue;
            for (auto s : ctx.signs)
                add(jobs, "", sized({{"n", n}, {"sign", to_string(s)}}),
                    [=] { return verify_decomplexified_capelli(kind, n, s); });
        }
    };
}

Planner rectangular(MatrixKind kind) {
    return [kind](const PlanContext& ctx, std::vector<Job>& jobs) {
        bool anti = kind == MatrixKind::antisymmetric;
        for (auto n : sizes(ctx, 2, anti ? 2 : 3))
            for (std::size_t r = 1; r <= (anti ? 1 : std::min<std::size_t>(2, n)); ++r)
                for (auto s : ctx.signs)
                    add(jobs, "", sized({{"n", n}, {"r", r}, {"sign", to_string(s)}}),
                        [=] { return verify_rectangular(kind, n, r, s); });
    };
}

std::vector<std::pair<std::string, Planner>> build_registry() {
    std::vector<std::pair<std::string, Planner>> reg;
    reg.emplace_back("capelli.plain", classical(MatrixKind::plain));
    reg.emplace_back("capelli.turnbull", classical(MatrixKind::symmetric));
    reg.emplace_back("capelli.huks", classical(MatrixKind::antisymmetric));
    reg.emplace_back("decomplex.square.plain", decomplexified(MatrixKind::plain));
    reg.emplace_back("decomplex.square.symmetric", decomplexified(MatrixKind::symmetric));
    reg.emplace_back("decomplex.square.antisymmetric", decomplexified(MatrixKind::antisymmetric));
    reg.emplace_back("rect.capelli", rectangular(MatrixKind::plain));
    reg.emplace_back("rect.turnbull", rectangular(MatrixKind::symmetric));
    reg.emplace_back("rect.antisym", rectangular(MatrixKind::antisymmetric));
    reg.emplace_back("factorization.theor1", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto n : sizes(ctx, 1, 3)) add(jobs, "", sized({{"n", n}}), [=] { return verify_theor1(n); });
    });
    reg.emplace_back("factorization.holfact_capelli", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto n : sizes(ctx, 1, 2))
            for (auto s : ctx.signs)
                add(jobs, "", sized({{"n", n}, {"sign", to_string(s)}}), [=] { return verify_holfact_capelli(n, s); });
    });
    reg.emplace_back("factorization.main", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto inst : {MainInstance::doubled_gl, MainInstance::weyl_capelli, MainInstance::rank_one,
                          MainInstance::rank_one_zero}) {
            bool rank_one = inst == MainInstance::rank_one || inst == MainInstance::rank_one_zero;
            for (auto n : sizes(ctx, 1, rank_one ? 1 : 2))
                for (auto s : ctx.signs)
                    add(jobs, "", sized({{"instance", to_string(inst)}, {"n", n}, {"sign", to_string(s)}}),
                        [=] { return verify_main_theorem(inst, n, s); });
        }
    });
    reg.emplace_back("local.holfactpsi", [](const PlanContext&, std::vector<Job>& jobs) {
        for (int c : {1, 2}) add(jobs, "", sized({{"conditions", c}}), [=] { return verify_holfactpsi(c); });
    });
    reg.emplace_back("local.holfactpsi_modanti", [](const PlanContext&, std::vector<Job>& jobs) {
        for (int c : {1, 2}) add(jobs, "", sized({{"conditions", c}}), [=] { return verify_holfactpsi_modanti(c); });
    });
    reg.emplace_back("local.coronfact", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto s : ctx.signs) add(jobs, "", sized({{"sign", to_string(s)}}), [=] { return verify_coronfact(s); });
    });
    reg.emplace_back("local.holfact_general", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        // exterior products stay small, so one size past max_n is cheap
        for (std::size_t n = 1; n <= std::min<std::size_t>(ctx.max_n + 1, 3); ++n)
            for (bool anti : {false, true})
                add(jobs, "", sized({{"n", n}, {"correction", anti ? "antiholomorphic" : "holomorphic"}}),
                    [=] { return verify_holfact_general(n, anti); });
    });
    reg.emplace_back("css.capelli", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto kind : {CssKind::css, CssKind::tcss, CssKind::degenerate})
            for (auto n : sizes(ctx, 1, kind == CssKind::degenerate ? 1 : 2))
                for (auto s : ctx.signs)
                    add(jobs, "", sized({{"kind", to_string(kind)}, {"n", n}, {"sign", to_string(s)}}),
                        [=] { return verify_css_capelli(kind, n, s); });
    });
    reg.emplace_back("css.implications", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto n : sizes(ctx, 1, 3)) add(jobs, "", sized({{"n", n}}), [=] { return verify_implications(n); });
    });
    reg.emplace_back("css.conditions", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto n : sizes(ctx, 1, 3)) add(jobs, "", sized({{"n", n}}), [=] { return verify_css_conditions(n); });
    });
    reg.emplace_back("center.capelli", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto n : sizes(ctx, 1, 3)) add(jobs, "", sized({{"n", n}}), [=] { return verify_center(n); });
    });
    reg.emplace_back("center.hc", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto n : sizes(ctx, 1, 3)) add(jobs, "", sized({{"n", n}}), [=] { return verify_hc(n); });
    });
    auto cayley = [](CayleyKind kind, std::size_t cap) {
        return [kind, cap](const PlanContext& ctx, std::vector<Job>& jobs) {
            for (auto n : sizes(ctx, 1, cap))
                add(jobs, "", sized({{"n", n}}), [=] { return run_cayley({n, kind, {}}); });
        };
    };
    reg.emplace_back("cayley.classical", cayley(CayleyKind::classical, 4));
    reg.emplace_back("cayley.decomplexified", cayley(CayleyKind::decomplexified, 2));
    reg.emplace_back("cayley.quaternion_commutation", [](const PlanContext& ctx, std::vector<Job>& jobs) {
        for (auto n : sizes(ctx, 1, 2))
            add(jobs, "", sized({{"n", n}}), [=] { return quaternion_commutation_check(n); });
    });
    reg.emplace_back("cayley.quaternion_complex", cayley(CayleyKind::quaternion_complex, 1));
    reg.emplace_back("cayley.quaternion_real", cayley(CayleyKind::quaternion_real, 1));
    reg.emplace_back("cayley.radial", cayley(CayleyKind::radial, 4));
    auto oracle = [](std::function<VerificationReport(std::uint64_t, std::size_t)> f, std::uint64_t seed,
                     std::size_t count) {
        return [=](const PlanContext&, std::vector<Job>& jobs) {
            add(jobs, "", sized({{"seed", seed}, {"count", count}}), [=] { return f(seed, count); });
        };
    };
    reg.emplace_back("oracle.coldet", oracle(oracle_coldet_algorithms, 1, 200));
    reg.emplace_back("oracle.top_form", oracle(oracle_top_form, 2, 100));
    reg.emplace_back("oracle.decomplexify", oracle(oracle_decomplexify, 3, 100));
    reg.emplace_back("oracle.weyl_action", oracle(oracle_weyl_action, 4, 200));
    reg.emplace_back("oracle.kernels", oracle(oracle_kernels, 5, 50));
    return reg;
}

const std::vector<std::pair<std::string, Planner>>& registry() {
    static const auto reg = build_registry();
    return reg;
}

} // namespace

const std::vector<std::string>& verifier_ids() {
    static const auto ids = [] {
        std::vector<std::string> out;
        for (auto& [id, planner] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

std::vector<Job> plan_suite(const SuiteConfig& config) {
    int max_n = config.effective_max_n();
    if (max_n < 1 || max_n > 3) throw ConfigError("max-n must be between 1 and 3");
    std::set<std::string> wanted;
    bool all = false;
    for (auto& id : config.selection) {
        if (id == "all") {
            all = true;
            continue;
        }
        auto& ids = verifier_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw ConfigError("unknown verifier id: " + id);
        wanted.insert(id);
    }
    if (config.selection.empty()) throw ConfigError("empty suite selection");

    PlanContext ctx{std::size_t(max_n), {}};
    if (config.signs != SignSelection::minus) ctx.signs.push_back(CorrSign::plus);
    if (config.signs != SignSelection::plus) ctx.signs.push_back(CorrSign::minus);

    std::vector<Job> jobs;
    for (auto& [id, planner] : registry()) {
        if (!all && !wanted.count(id)) continue;
        std::size_t first = jobs.size();
        planner(ctx, jobs);
        for (std::size_t k = first; k < jobs.size(); ++k) jobs[k].id = id;
    }
    return jobs;
}

bool report_counts_as_failure(const VerificationReport& r, bool strict_conditional) {
    if (r.residual_is_zero) return false;
    return !r.conditional || strict_conditional;
}

int resolve_workers(const SuiteConfig& config) {
    if (config.workers > 0) return config.workers;
    if (const char* env = std::getenv("NC_CAPELLI_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 0;
}

SuiteResult run_suite(const SuiteConfig& config) {
    auto jobs = plan_suite(config);
    std::vector<std::optional<VerificationReport>> slots(jobs.size());
    std::atomic<bool> stop{false};
    int workers = resolve_workers(config);
#ifdef _OPENMP
    if (workers == 0) workers = omp_get_max_threads();
#else
    workers = 1;
#endif
    auto run_one = [&](std::size_t k) {
        if (stop.load()) return;
        VerificationReport rep;
        try {
            rep = jobs[k].run();
        } catch (const std::exception& e) {
            rep.id = jobs[k].id;
            rep.params = jobs[k].params;
            rep.fail(std::string("error: ") + e.what());
        }
        if (config.fail_fast && report_counts_as_failure(rep, config.strict_conditional)) stop = true;
        slots[k] = std::move(rep);
    };
    if (workers <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) run_one(k);
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (std::size_t k = 0; k < jobs.size(); ++k) run_one(k);
    }

    SuiteResult out;
    for (auto& s : slots) {
        if (!s) {
            out.stopped_early = true;
            continue;
        }
        if (report_counts_as_failure(*s, config.strict_conditional)) out.passed = false;
        out.reports.push_back(std::move(*s));
    }
    return out;
}

Json suite_json(const SuiteConfig& config, const SuiteResult& result, const std::string& started_at) {
    Json j = Json::object();
    j["version"] = "1";
    j["suite"] = config.selection;
    j["startedAt"] = started_at;
    Json reports = Json::array();
    for (auto& r : result.reports) reports.push_back(to_json(r));
    j["reports"] = std::move(reports);
    return j;
}

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace capelli
