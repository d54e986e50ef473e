#include "kstab/io.hpp"

#include <cstdio>
#include <sstream>

#include "json_util.hpp"

namespace kstab {

using detail::json;
using detail::rat_to_json;
using detail::vec_to_json;

namespace {

const char* const kFields[] = {"V", "Vg", "E", "J", "D", "L", "M", "M_boundary", "Fut", "Fut_closed"};

std::vector<const Rat*> fields(const FunctionalReport& r) {
    return {&r.V, &r.Vg, &r.E, &r.J, &r.D, &r.L, &r.M, &r.M_boundary, &r.Fut, &r.Fut_closed};
}

std::vector<double> fields(const NumericReport& r) {
    return {r.V, r.Vg, r.E, r.J, r.D, r.L, r.M, r.M_boundary, r.Fut, r.Fut_closed};
}

std::string dec(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string to_json(const FunctionalReport& r) {
    json j;
    const auto fs = fields(r);
    for (std::size_t i = 0; i < fs.size(); ++i) j[kFields[i]] = rat_to_json(*fs[i]);
    j["barycenter"] = vec_to_json(r.barycenter);
    j["reduced_central_fibre"] = r.reduced_central_fibre;
    json m = json::array();
    for (const auto& x : r.multiplicities) m.push_back(x.str());
    j["multiplicities"] = m;
    return j.dump(2);
}

std::string to_json(const NumericReport& r) {
    json j;
    const auto fs = fields(r);
    for (std::size_t i = 0; i < fs.size(); ++i) j[kFields[i]] = json{{"decimal", fs[i]}};
    j["barycenter"] = r.barycenter;
    j["reduced_central_fibre"] = r.reduced_central_fibre;
    j["quadrature_error"] = r.error;
    return j.dump(2);
}

std::string to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return json{{"ok", r.ok()}, {"checks", checks}}.dump(2);
}

std::string to_json(const Verdict& v) {
    json j;
    j["status"] = std::string(to_string(v.status));
    if (!v.barycenter.empty()) j["barycenter"] = vec_to_json(v.barycenter);
    if (v.coefficients) j["coefficients"] = vec_to_json(*v.coefficients);
    if (!v.numeric_barycenter.empty()) {
        j["numeric_barycenter"] = v.numeric_barycenter;
        j["numeric_coefficients"] = v.numeric_coefficients;
        j["quadrature_error"] = v.numeric_error;
    }
    if (v.witness) j["destabilizer"] = {{"v", vec_to_json(v.witness->v)}, {"D", rat_to_json(v.witness->D)}};
    if (!v.warning.empty()) j["warning"] = v.warning;
    return j.dump(2);
}

std::string csv_header(const FunctionalReport& r) {
    std::string out;
    for (const char* f : kFields) out += std::string(out.empty() ? "" : ",") + f;
    for (std::size_t i = 0; i < r.barycenter.size(); ++i) out += ",b" + std::to_string(i + 1);
    return out + ",reduced_central_fibre";
}

std::string csv_row(const FunctionalReport& r) {
    std::string out;
    for (const Rat* x : fields(r)) out += (out.empty() ? "" : ",") + dec(to_double(*x));
    for (const auto& b : r.barycenter) out += "," + dec(to_double(b));
    return out + (r.reduced_central_fibre ? ",1" : ",0");
}

std::string csv_header(const NumericReport& r) {
    std::string out;
    for (const char* f : kFields) out += std::string(out.empty() ? "" : ",") + f;
    for (std::size_t i = 0; i < r.barycenter.size(); ++i) out += ",b" + std::to_string(i + 1);
    return out + ",reduced_central_fibre,quadrature_error";
}

std::string csv_row(const NumericReport& r) {
    std::string out;
    for (double x : fields(r)) out += (out.empty() ? "" : ",") + dec(x);
    for (double b : r.barycenter) out += "," + dec(b);
    return out + (r.reduced_central_fibre ? ",1," : ",0,") + dec(r.error);
}

std::string to_text(const FunctionalReport& r) {
    std::ostringstream os;
    const auto fs = fields(r);
    for (std::size_t i = 0; i < fs.size(); ++i) os << kFields[i] << " = " << to_string(*fs[i]) << "\n";
    os << "barycenter = " << to_string(r.barycenter) << "\n";
    os << "reduced_central_fibre = " << (r.reduced_central_fibre ? "true" : "false") << "\n";
    return os.str();
}

std::string to_text(const ValidationReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << (r.ok() ? "valid" : "invalid") << "\n";
    return os.str();
}

std::string to_text(const Verdict& v) {
    std::string out(to_string(v.status));
    if (v.coefficients && !v.coefficients->empty()) out += "; c=" + to_string(*v.coefficients);
    if (v.witness) out += "; destabilizer v=" + to_string(v.witness->v) + ", D=" + to_string(v.witness->D);
    if (!v.warning.empty()) out += "; warning: " + v.warning;
    return out;
}

}  // namespace kstab
