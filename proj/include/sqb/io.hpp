#pragma once

// Grid strings, SampledFunction JSON files and fixed-format numeric output.

#include <string>
#include <vector>

#include "sqb/sampled_function.hpp"

namespace sqb {

/// "a:b:n" (n >= 1 evenly spaced points, endpoints included) or a single number.
/// SchemaError otherwise.
std::vector<double> parse_grid(const std::string& text);

/// "builtin:NAME" or a path to a JSON file
///   {"domain": ..., "grid": [...], "values": [...], "decay": {"kind": ..., "a": ...}}.
/// SchemaError names the file with the line of a parse error or the offending field.
SampledFunction load_sampled_function(const std::string& spec);
SampledFunction parse_sampled_function(const std::string& json_text, const std::string& source = "<string>");

std::string to_json(Domain domain, const std::vector<double>& grid, const std::vector<double>& values,
                    const Decay& decay);

/// 17 significant digits, scientific.
std::string format_number(double v);

} // namespace sqb
