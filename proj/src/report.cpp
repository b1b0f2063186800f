#include "isoflow/report.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace isoflow {

void SuiteReport::add(CheckResult r) {
    switch (r.status) {
        case CheckStatus::Pass: ++passed; break;
        case CheckStatus::Fail: ++failed; break;
        case CheckStatus::Report: ++reports; break;
    }
    checks.push_back(std::move(r));
}

namespace {

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Report: return "report";
    }
    return "?";
}

}  // namespace

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (order=" << config.order << " digits=" << config.digits
       << " degree-cap=" << config.degree_cap << ")\n";
    for (const auto& c : checks) {
        os << "  [" << status_str(c.status) << "] " << c.id << "  {" << c.anchor << "}";
        if (config.timings) os << "  " << c.ms << "ms";
        if (!c.witness.empty()) os << "  -- " << c.witness;
        os << "\n";
    }
    os << "summary: " << passed << " pass, " << failed << " fail, " << reports << " report\n";
    return os.str();
}

std::string SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["config"] = {{"order", config.order},
                   {"digits", config.digits},
                   {"degree_cap", config.degree_cap}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"id", c.id},
                               {"anchor", c.anchor},
                               {"status", status_str(c.status)},
                               {"witness", c.witness},
                               {"ms", config.timings ? c.ms : 0}});
    }
    j["summary"] = {{"pass", passed}, {"fail", failed}, {"report", reports}};
    return j.dump(2);
}

std::string share_path(const std::string& filename) {
    if (const char* env = std::getenv("ISOFLOW_SHARE")) {
        return std::string(env) + "/" + filename;
    }
#ifdef ISOFLOW_SHARE_DIR
    return std::string(ISOFLOW_SHARE_DIR) + "/" + filename;
#else
    return "share/" + filename;
#endif
}

}  // namespace isoflow
