#include "baker/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace baker {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

static std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else {
            out += c;
        }
    }
    return out;
}

std::string report_to_canonical_json(const Report& r) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"checks\": [\n";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        os << "    {\"measured\": " << fmt_double(c.measured) << ", \"name\": \""
           << escape(c.name) << "\", \"paper_ref\": \"" << escape(c.paper_ref)
           << "\", \"pass\": " << (c.pass ? "true" : "false")
           << ", \"tolerance\": " << fmt_double(c.tolerance) << "}"
           << (i + 1 < r.checks.size() ? "," : "") << "\n";
    }
    os << "  ],\n";
    os << "  \"curve_fingerprint\": \"" << escape(r.curve_fingerprint) << "\",\n";
    os << "  \"precision\": \"" << escape(r.precision) << "\",\n";
    os << "  \"seed\": " << r.seed << ",\n";
    os << "  \"suite\": \"" << escape(r.suite) << "\",\n";
    os << "  \"timing_sec\": " << (r.timing_sec ? fmt_double(*r.timing_sec) : "null") << ",\n";
    os << "  \"version\": \"" << escape(r.version) << "\"\n";
    os << "}\n";
    return os.str();
}

void emit_report(const Report& r, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write report file: " + path);
    f << report_to_canonical_json(r);
}

CheckRecord make_check(const std::string& name, const std::string& ref, double measured,
                       double tolerance) {
    CheckRecord c;
    c.name = name;
    c.paper_ref = ref;
    c.measured = measured;
    c.tolerance = tolerance;
    c.pass = measured <= tolerance;
    return c;
}

}  // namespace baker
