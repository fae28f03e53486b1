#pragma once

#include "ncdef/families.hpp"
#include "ncdef/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ncdef {

inline constexpr const char* kToolVersion = "0.1.0";

// One verification entry with its wall-clock cost.
struct TimedCheck {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string details;
    double ms = 0.0;
};

struct ToolReport {
    std::string command;
    json config = json::object();
    std::vector<TimedCheck> checks;

    void add(const std::string& name, CheckStatus status, const std::string& details = "",
             double ms = 0.0) {
        checks.push_back({name, status, details, ms});
    }
    void add(const FamilyReport& rep, double ms_total = 0.0);

    bool failed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return true;
        return false;
    }

    // Status "fail" anywhere means a nonzero process exit.
    int exit_code() const { return failed() ? 1 : 0; }

    // include_timings = false yields the byte-stable determinism view.
    json to_json(bool include_timings = true) const;
    std::string summary() const;
};

const char* status_name(CheckStatus s);

}  // namespace ncdef
