// Curve and point input parsing (JSON), shared by the CLI and the harness.
#ifndef BAKER_IO_HPP
#define BAKER_IO_HPP

#include <optional>
#include <string>

#include "baker/curve.hpp"

namespace baker {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Curve input: nu are exact rationals (decimal strings convert exactly);
// the branch point is either an exact value (snapped to a root) or a root
// index under the (Re, Im) ordering.
struct CurveInput {
    int genus = 1;
    std::vector<Rational> nu;
    std::optional<Rational> branch_value;
    std::optional<int> branch_index;
    std::optional<std::pair<Rational, Rational>> scaling;
    std::string name;

    bool exact_branch() const { return branch_value.has_value(); }
    // validated spec; requires an exact branch value
    CurveSpec spec() const;
    std::string canonical_json() const;  // fingerprint source
};

CurveInput parse_curve_json(const std::string& text);
CurveInput load_curve_file(const std::string& path);

// points file: [{"x": [re, im], "y": [re, im]}, ...]
std::vector<std::pair<std::complex<double>, std::complex<double>>> load_points_file(
    const std::string& path);

}  // namespace baker

#endif
