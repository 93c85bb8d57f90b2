#include "capelli/report.hpp"

namespace capelli {

std::string clip_rendering(std::string s) {
    if (s.size() > kMaxRendering) {
        s.resize(kMaxRendering);
        s += "...";
    }
    return s;
}

void VerificationReport::fail(const std::string& rendering) {
    residual_is_zero = false;
    if (residual_rendering.empty()) residual_rendering = clip_rendering(rendering.empty() ? "nonzero" : rendering);
}

void VerificationReport::require(const std::string& name, bool ok, const std::string& rendering) {
    details[name] = ok;
    if (!ok) fail(name + ": " + (rendering.empty() ? "failed" : rendering));
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["id"] = r.id;
    j["identityName"] = r.identity_name;
    j["hostRing"] = r.host_ring;
    j["sizeParams"] = r.params;
    j["residualIsZero"] = r.residual_is_zero;
    j["residualRendering"] = r.residual_rendering;
    j["lhsTermCount"] = r.lhs_term_count;
    j["rhsTermCount"] = r.rhs_term_count;
    j["wallMillis"] = r.wall_millis;
    j["conditional"] = r.conditional;
    j["details"] = r.details;
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.identity_name = j.at("identityName").get<std::string>();
    r.host_ring = j.at("hostRing").get<std::string>();
    r.params = j.at("sizeParams");
    r.residual_is_zero = j.at("residualIsZero").get<bool>();
    r.residual_rendering = j.at("residualRendering").get<std::string>();
    r.lhs_term_count = j.at("lhsTermCount").get<std::size_t>();
    r.rhs_term_count = j.at("rhsTermCount").get<std::size_t>();
    r.wall_millis = j.at("wallMillis").get<std::int64_t>();
    r.conditional = j.value("conditional", false);
    r.details = j.value("details", Json::object());
    return r;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return to_json(a) == to_json(b);
}

} // namespace capelli
