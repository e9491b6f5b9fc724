#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nw/json.hpp"

namespace nw {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  ///< cites the theorem condition being verified
};

/// Ordered list of named pass/fail results. Failures are entries, not exceptions.
class CheckReport {
public:
    void add(std::string name, bool pass, std::string detail);
    void append(const CheckReport& other, const std::string& prefix = {});

    const std::vector<Check>& checks() const { return checks_; }
    bool all_pass() const;
    std::optional<Check> first_failure() const;
    const Check* find(const std::string& name) const;

    Json to_json() const;

private:
    std::vector<Check> checks_;
};

}  // namespace nw
