#include "lpheat/report.hpp"

#include <cmath>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "lpheat/io.hpp"

namespace lpheat {

EstimateReport make_report(std::string name, double measured, double bound, double tolerance,
                           std::vector<std::pair<std::string, double>> params) {
    EstimateReport r;
    r.name = std::move(name);
    r.measured = measured;
    r.bound = bound;
    r.ratio = bound != 0.0 ? measured / bound : (measured == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    r.passed = measured <= bound * (1.0 + tolerance);
    r.params = std::move(params);
    r.tolerance = tolerance;
    return r;
}

std::string reports_to_csv(const std::vector<EstimateReport>& reports) {
    std::ostringstream out;
    out << "name,measured,bound,ratio,passed,tolerance,params\n";
    for (const auto& r : reports) {
        out << r.name << ',' << format_real(r.measured) << ',' << format_real(r.bound) << ',' << format_real(r.ratio)
            << ',' << (r.passed ? "true" : "false") << ',' << format_real(r.tolerance) << ',';
        for (std::size_t i = 0; i < r.params.size(); ++i) {
            if (i > 0) out << ';';
            out << r.params[i].first << '=' << format_real(r.params[i].second);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// JSON has no infinity; such values become the string "inf".
nlohmann::json real_json(double v) {
    if (std::isfinite(v)) return v;
    return format_real(v);
}

}  // namespace

std::string reports_to_json(const std::vector<EstimateReport>& reports) {
    auto array = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [key, value] : r.params) params[key] = real_json(value);
        array.push_back({{"name", r.name},
                         {"measured", real_json(r.measured)},
                         {"bound", real_json(r.bound)},
                         {"ratio", real_json(r.ratio)},
                         {"passed", r.passed},
                         {"tolerance", real_json(r.tolerance)},
                         {"params", params}});
    }
    return array.dump(2) + "\n";
}

}  // namespace lpheat
