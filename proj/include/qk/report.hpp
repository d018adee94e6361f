#pragma once

#include <string>
#include <vector>

namespace qk {

/// One verifier outcome. Residuals are exact by construction; "0" means a
/// symbolically vanishing residual.
struct CheckItem {
    std::string suite;
    std::string relation;
    int block = -1; // -1 = not blockwise
    std::string mode = "exact";
    std::string residual = "0";
    bool pass = false;
    std::string note;
};

struct Report {
    std::vector<CheckItem> checks;

    void add(CheckItem c) { checks.push_back(std::move(c)); }
    void add(const std::string &suite, const std::string &relation, bool pass,
             const std::string &residual = "", int block = -1, const std::string &note = "",
             const std::string &mode = "exact") {
        checks.push_back({suite, relation, block, mode,
                          residual.empty() ? (pass ? "0" : "nonzero") : residual, pass, note});
    }
    bool pass() const {
        for (auto &c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (auto &c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

} // namespace qk
