#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superko/json_io.hpp"

namespace superko {

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;
    std::optional<double> max_error;

    bool ok() const { return failed == 0; }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    // Optional theory data: a generator ({"kind": "seft"|"aft"}) or a
    // deformation ({"kind": "deformation", "field", "ambient", "morphism"}).
    std::optional<Json> input;
};

// The suites in report order; "all" runs each of them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws std::invalid_argument for an unknown suite name.
std::vector<SuiteReport> run_verify(const std::string& name, const VerifyOptions& options);

Json to_json(const CheckResult& c);
Json to_json(const SuiteReport& s);
Json verify_json(const std::string& name, std::uint64_t seed, const std::vector<SuiteReport>& reports);
std::string verify_markdown(const std::string& name, std::uint64_t seed, const std::vector<SuiteReport>& reports);

}  // namespace superko
