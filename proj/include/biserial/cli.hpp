#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace biserial {

const char* toolkit_version();

struct CheckRecord {
    std::string id;
    std::string description;
    std::string expected;
    std::string observed;
    bool pass = false;
    double runtime_ms = 0;
};

struct SuiteParams {
    std::string family = "psl1";
    int d = 3;
    int max_len = -1;    // -1: the suite's own default
    int field_ext = 2;
    int radius = 6;
    int jobs = 1;
    std::uint64_t seed = 20240601;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json parameters;
    std::vector<CheckRecord> checks;  // sorted by id
    std::string presentation_hash;
    int jobs = 1;
    double runtime_ms = 0;
    bool pass() const;
};

std::vector<std::string> suite_names();
std::string suite_summary(const std::string& name);
// throws InvalidParameter for an unknown suite or unsupported family
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

nlohmann::json to_json(const SuiteReport& r);
// the report without timings or worker counts
nlohmann::json normalized(const SuiteReport& r);
std::string to_markdown(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

// Full command line; returns 0 all pass, 1 check failure, 2 usage error.
int run_cli(int argc, char** argv);
int run_cli(const std::vector<std::string>& args, std::string* out = nullptr, std::string* err = nullptr);

}  // namespace biserial
