#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcg::cli {

struct ReportLine {
    bool pass = true;
    std::string suite;
    std::string detail;
};

struct SuiteOptions {
    int max_n = 0;      // 0: suite default
    int samples = 0;    // 0: suite default
    std::uint64_t rng_seed = 42;
};

const std::vector<std::string>& suite_names();

// Runs one suite; lines come back in a fixed order whatever the thread timing.
std::vector<ReportLine> run_suite(const std::string& name, const SuiteOptions& opt);

std::string format_line(const ReportLine& l);
std::string report_json(const std::vector<ReportLine>& lines);

}  // namespace mcg::cli
