#include "ncdef/report.hpp"

#include <sstream>

namespace ncdef {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Logged: return "logged";
    }
    return "?";
}

void ToolReport::add(const FamilyReport& rep, double ms_total) {
    std::string prefix = std::string(family_name(rep.id)) + "/";
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const auto& c = rep.checks[i];
        double ms = (i + 1 == rep.checks.size()) ? ms_total : 0.0;
        checks.push_back({prefix + c.name, c.status, c.details, ms});
    }
}

json ToolReport::to_json(bool include_timings) const {
    json out;
    out["tool_version"] = kToolVersion;
    out["command"] = command;
    out["config"] = config;
    json cs = json::array();
    for (const auto& c : checks) {
        json e = {{"name", c.name}, {"status", status_name(c.status)}, {"details", c.details}};
        if (include_timings) e["ms"] = c.ms;
        cs.push_back(e);
    }
    out["checks"] = cs;
    out["ok"] = !failed();
    return out;
}

std::string ToolReport::summary() const {
    std::ostringstream os;
    std::size_t pass = 0, fail = 0, logged = 0;
    for (const auto& c : checks) {
        switch (c.status) {
            case CheckStatus::Pass: ++pass; break;
            case CheckStatus::Fail: ++fail; break;
            case CheckStatus::Logged: ++logged; break;
        }
        os << "  [" << status_name(c.status) << "] " << c.name;
        if (!c.details.empty()) os << " — " << c.details;
        os << "\n";
    }
    os << (fail ? "FAILED" : "OK") << " (" << pass << " passed, " << fail << " failed, " << logged
       << " logged)\n";
    return os.str();
}

}  // namespace ncdef
