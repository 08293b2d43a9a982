#pragma once

// Named verification cases: each rebuilds a graph or runs an analysis and
// compares the results with the expected values.

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace planecolor {

class UnknownCase : public std::runtime_error {
public:
    explicit UnknownCase(const std::string& id) : std::runtime_error("unknown case: " + id) {}
};

struct CheckResult {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct CaseReport {
    std::string id;
    std::string description;
    std::vector<CheckResult> checks;
    double ms = 0;
    bool pass() const;
};

struct VerificationCase {
    std::string id;
    std::string description;
    bool slow = false;
    std::function<std::vector<CheckResult>()> run;
};

const std::vector<VerificationCase>& verification_cases();
const VerificationCase& verification_case(const std::string& id);

CaseReport run_case(const VerificationCase& c);

nlohmann::json to_json(const CaseReport& r);

}  // namespace planecolor
