#pragma once

// Check records shared by the verification suites and the CLI. A check is a
// comparison of two exactly-computed values; pass is exact equality.

#include <string>
#include <vector>

namespace magicchart {

struct CheckRecord {
    std::string check_id;
    std::string description;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    int passed() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 1 : 0;
        return n;
    }
    int failed() const { return static_cast<int>(checks.size()) - passed(); }
    bool all_pass() const { return failed() == 0; }

    void add(std::string id, std::string description, std::string lhs, std::string rhs) {
        bool ok = lhs == rhs;
        checks.push_back(
            {std::move(id), std::move(description), std::move(lhs), std::move(rhs), ok});
    }
};

}  // namespace magicchart
