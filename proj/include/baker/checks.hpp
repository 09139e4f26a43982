// Named verification checks over the exact and numeric layers, grouped into
// the suites exposed by the CLI and reused (with larger sample counts) by the
// acceptance runner.
#ifndef BAKER_CHECKS_HPP
#define BAKER_CHECKS_HPP

#include "baker/io.hpp"
#include "baker/omega.hpp"
#include "baker/report.hpp"

namespace baker {

struct SuiteOptions {
    unsigned seed = 1;
    bool extended = false;      // extended precision for the numeric suites
    int concrete_divisors = 20;  // divisibility samples per curve
    int end_to_end_divisors = 5;
    int route_points = 5;
    int pwp_points = 4;
    int quasi_box = 1;  // max ||m||_inf exercised in quasi-periodicity
    int series_order = 20;
};

const OmegaMatrixX& omega_symbolic(int g);
const std::vector<MultiPoly>& kappa_symbolic(int g);

std::vector<CheckRecord> algebraic_suite(int g, const SuiteOptions& opt);
std::vector<CheckRecord> periods_suite(const CurveInput& in, const SuiteOptions& opt);
std::vector<CheckRecord> h_suite(const CurveInput& in, const SuiteOptions& opt);
std::vector<CheckRecord> pde_suite(const CurveInput& in, const SuiteOptions& opt);

}  // namespace baker

#endif
