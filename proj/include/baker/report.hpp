// Machine-readable check reports with a canonical, diff-stable JSON encoding.
#ifndef BAKER_REPORT_HPP
#define BAKER_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace baker {

struct CheckRecord {
    std::string name;
    std::string paper_ref;  // stable identifier of the verified statement
    double measured = 0;
    double tolerance = 0;
    bool pass = false;
};

struct Report {
    std::string version = "0.1.0";
    std::string suite;
    std::string precision = "double";
    unsigned seed = 1;
    std::string curve_fingerprint;  // fnv1a-64 of the canonical curve JSON
    std::vector<CheckRecord> checks;
    std::optional<double> timing_sec;  // absent (null) unless explicitly requested

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::uint64_t fnv1a64(const std::string& s);

// canonical encoding: sorted keys, two-space indent, floats at 17 significant
// digits; identical inputs produce byte-identical files
std::string report_to_canonical_json(const Report& r);
void emit_report(const Report& r, const std::string& path);

CheckRecord make_check(const std::string& name, const std::string& ref, double measured,
                       double tolerance);

}  // namespace baker

#endif
