#pragma once

#include <string>
#include <vector>

#include "lpheat/lprime.hpp"

namespace lpheat {

/// A named test element.  `radius` is R with supp F in [-R, R] when the
/// primitive has compact support, and 0 otherwise.
struct CatalogEntry {
    std::string name;
    LprimeElement element;
    bool compact;
    double radius;
};

/// The elements every structural check runs over: Dirac differences, step
/// primitives, Gaussian powers, the slowly decaying tails and sampled data.
std::vector<CatalogEntry> standard_catalog();

}  // namespace lpheat
