#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpheat/catalog.hpp"
#include "lpheat/quadrature.hpp"
#include "lpheat/report.hpp"

namespace lpheat::cli {

struct SuiteOptions {
    std::optional<double> tolerance;  // replaces every default threshold when set
    std::vector<CatalogEntry> elements = standard_catalog();
    QuadratureConfig cfg;
};

/// Suite names accepted by `verify --suite`, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"); throws Error(kDomain) on an unknown name.
std::vector<EstimateReport> run_suite(const std::string& name, const SuiteOptions& opts);

/// True if any term of the element's primitive is sampled data.
bool has_sampled_data(const LprimeElement& f);

/// Catalog entry for user data: compact with the smallest centered radius
/// when its support is bounded.
CatalogEntry data_entry(LprimeElement f, const QuadratureConfig& cfg);

}  // namespace lpheat::cli
