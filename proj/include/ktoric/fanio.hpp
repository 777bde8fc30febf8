#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ktoric/ktheory.hpp"
#include "ktoric/stackyfan.hpp"

namespace ktoric {

/// Schema or syntax problem in a fan file.
struct FanIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FanFile {
    std::string name;
    StackyFan fan;

    bool operator==(const FanFile&) const = default;
};

/// Fan file format, version field "format": 1.
FanFile parse_fan_json(const std::string& text);
std::string serialize_fan_json(const FanFile& file);

struct ReportOptions {
    K0Mode mode = K0Mode::group_ring;
    std::vector<long long> primes;  // empty: {2,3,5,7} plus multiplicity primes
    bool shellability = true;
    int shell_cap = 12;
    bool timings = false;  // off by default so JSON reports are byte-stable
};

/// Stable-ordered JSON report; see the README for the schema.
std::string report_json(const FanFile& file, const ReportOptions& opts);
/// Human-oriented text rendering of the same data (non-contractual).
std::string report_text(const FanFile& file, const ReportOptions& opts);

/// True when the report pipeline considered the fan valid (CLI exit 0 vs 1).
bool fan_is_valid(const FanFile& file);

}  // namespace ktoric
