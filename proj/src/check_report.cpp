#include "nw/check_report.hpp"

#include <algorithm>

namespace nw {

void CheckReport::add(std::string name, bool pass, std::string detail) {
    checks_.push_back({std::move(name), pass, std::move(detail)});
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.detail});
}

bool CheckReport::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::optional<Check> CheckReport::first_failure() const {
    for (const auto& c : checks_)
        if (!c.pass) return c;
    return std::nullopt;
}

const Check* CheckReport::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

Json CheckReport::to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks_) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return arr;
}

}  // namespace nw
