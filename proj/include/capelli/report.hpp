#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "capelli/ring.hpp"

namespace capelli {

using Json = nlohmann::ordered_json;

struct VerificationReport {
    std::string id;            // registry id, e.g. "capelli.plain"
    std::string identity_name;
    std::string host_ring;
    Json params = Json::object(); // n, r, sign, ... in a fixed order
    bool residual_is_zero = true;
    std::string residual_rendering;
    std::size_t lhs_term_count = 0;
    std::size_t rhs_term_count = 0;
    std::int64_t wall_millis = 0;
    // evidence for a statement that is itself conditional; never fails a run by default
    bool conditional = false;
    Json details = Json::object();

    // Marks the report failed with a rendering of the offending residual.
    void fail(const std::string& rendering);
    // Folds a sub-check into the report: records it under details[name] and
    // fails the report when ok is false.
    void require(const std::string& name, bool ok, const std::string& rendering = "");
};

// Residual renderings longer than this are cut with a trailing "...".
inline constexpr std::size_t kMaxRendering = 4000;
std::string clip_rendering(std::string s);

template <Ring R>
void record_residual(VerificationReport& rep, const R& lhs, const R& rhs) {
    rep.lhs_term_count = lhs.term_count();
    rep.rhs_term_count = rhs.term_count();
    R residual = lhs - rhs;
    if (!residual.is_zero()) rep.fail(residual.to_string());
}

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);
bool operator==(const VerificationReport& a, const VerificationReport& b);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace capelli
