#pragma once

// Named pass/fail check lines collected into reports; the CLI serializes
// these as JSON and derives its exit code from them.

#include <json.hpp>
#include <string>
#include <vector>

namespace dcl {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail; // expected/computed when failing, extra info otherwise
};

struct Report {
    std::string title;
    std::vector<CheckLine> checks;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks)
            arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        return nlohmann::json{{"title", title}, {"pass", all_pass()}, {"checks", arr}};
    }
};

} // namespace dcl
