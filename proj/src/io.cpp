#include "baker/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace baker {

using nlohmann::json;

CurveSpec CurveInput::spec() const {
    if (!branch_value)
        throw ParseError("curve uses a branch-point index; exact operations need a value");
    return validate_curve(genus, nu, *branch_value);
}

std::string CurveInput::canonical_json() const {
    std::ostringstream os;
    os << "{\"branch_point\":";
    if (branch_value)
        os << "\"" << rat_str(*branch_value) << "\"";
    else
        os << *branch_index;
    os << ",\"genus\":" << genus << ",\"nu\":[";
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (i) os << ",";
        os << "\"" << rat_str(nu[i]) << "\"";
    }
    os << "]";
    if (scaling)
        os << ",\"scaling\":{\"s\":\"" << rat_str(scaling->first) << "\",\"t\":\""
           << rat_str(scaling->second) << "\"}";
    os << "}";
    return os.str();
}

static Rational rat_from_json(const json& v, const std::string& what) {
    try {
        if (v.is_string()) return rat_parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
        if (v.is_number_float()) {
            std::ostringstream os;
            os.precision(17);
            os << v.get<double>();
            return rat_parse(os.str());
        }
    } catch (const std::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
    throw ParseError(what + ": expected a number or a rational string");
}

CurveInput parse_curve_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("curve file must be a JSON object");
    CurveInput in;
    if (!j.contains("genus") || !j["genus"].is_number_integer())
        throw ParseError("missing integer field 'genus'");
    in.genus = j["genus"].get<int>();
    if (in.genus < 1 || in.genus > 3)
        throw ParseError("genus must be 1, 2, or 3");
    if (!j.contains("nu") || !j["nu"].is_array())
        throw ParseError("missing array field 'nu'");
    for (const auto& v : j["nu"]) in.nu.push_back(rat_from_json(v, "nu entry"));
    if (static_cast<int>(in.nu.size()) != 2 * in.genus + 3)
        throw ParseError("expected " + std::to_string(2 * in.genus + 3) +
                         " nu coefficients, got " + std::to_string(in.nu.size()));
    if (!j.contains("branch_point")) throw ParseError("missing field 'branch_point'");
    const auto& bp = j["branch_point"];
    if (bp.is_number_integer())
        in.branch_index = bp.get<int>();
    else
        in.branch_value = rat_from_json(bp, "branch_point");
    if (j.contains("scaling")) {
        const auto& sc = j["scaling"];
        if (!sc.is_object() || !sc.contains("s") || !sc.contains("t"))
            throw ParseError("scaling must be an object with fields 's' and 't'");
        in.scaling = std::make_pair(rat_from_json(sc["s"], "scaling.s"),
                                    rat_from_json(sc["t"], "scaling.t"));
    }
    if (j.contains("name") && j["name"].is_string()) in.name = j["name"].get<std::string>();
    return in;
}

CurveInput load_curve_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open curve file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_curve_json(ss.str());
}

std::vector<std::pair<std::complex<double>, std::complex<double>>> load_points_file(
    const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open points file: " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("points file must be a JSON array");
    std::vector<std::pair<std::complex<double>, std::complex<double>>> out;
    for (const auto& p : j) {
        auto get_c = [&](const json& v) {
            if (!v.is_array() || v.size() != 2)
                throw ParseError("complex numbers are [re, im] pairs");
            return std::complex<double>(v[0].get<double>(), v[1].get<double>());
        };
        if (!p.contains("x") || !p.contains("y"))
            throw ParseError("each point needs fields 'x' and 'y'");
        out.emplace_back(get_c(p["x"]), get_c(p["y"]));
    }
    return out;
}

}  // namespace baker
