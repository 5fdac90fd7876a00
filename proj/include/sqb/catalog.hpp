#pragma once

// Built-in test functions. Each carries what is known about it in closed form.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqb/mellin.hpp"
#include "sqb/sampled_function.hpp"

namespace sqb {

struct CatalogEntry {
    std::string name;
    std::string description;
    SampledFunction fn;
    std::optional<ComplexFn> mellin;                   // f*(s)
    std::optional<std::function<double(double)>> ff;   // (Ff)(tau) in closed form
    std::string hypotheses;                            // which integrability hypotheses hold
};

/// exp3sqrt, k0sqrt (half line) and gauss, t2gauss (real line).
const std::vector<CatalogEntry>& catalog();
/// Looks up "NAME" or "builtin:NAME"; SchemaError if unknown.
const CatalogEntry& catalog_entry(const std::string& name);

} // namespace sqb
