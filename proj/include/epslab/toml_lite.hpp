#pragma once

#include "epslab/json_forms.hpp"

#include <string>

namespace epslab {

/**
 * Parse a TOML subset into a JSON object tree: [table] and [[array-of-table]]
 * headers with dotted paths, bare-key assignments, basic strings, integers,
 * floats, booleans, inline arrays (newlines allowed inside), and one-level
 * inline tables. Throws std::runtime_error with a line number on anything
 * outside the subset, on duplicate keys, and on malformed input.
 */
Json parse_toml(const std::string& text);

/// Read a config file and parse it: a ".json" suffix selects the JSON
/// parser, anything else the TOML subset. Throws std::runtime_error when the
/// file cannot be read or parsed.
Json load_config_file(const std::string& path);

}  // namespace epslab
