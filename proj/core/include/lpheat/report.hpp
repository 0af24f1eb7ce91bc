#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lpheat {

/// One measured-versus-bound check.
struct EstimateReport {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    double ratio = 0.0;  // measured / bound; 0 when both vanish
    bool passed = false;  // measured <= bound (1 + tolerance)
    std::vector<std::pair<std::string, double>> params;
    double tolerance = 0.0;
};

EstimateReport make_report(std::string name, double measured, double bound, double tolerance,
                           std::vector<std::pair<std::string, double>> params = {});

/// CSV with a header row: name,measured,bound,ratio,passed,tolerance,params.
/// params are rendered as key=value pairs joined by ';'.
std::string reports_to_csv(const std::vector<EstimateReport>& reports);
/// JSON array of report objects.
std::string reports_to_json(const std::vector<EstimateReport>& reports);

}  // namespace lpheat
