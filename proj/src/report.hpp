#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"

namespace signumcalc {

enum class Format { Json, Markdown, Text };

std::optional<Format> format_from_name(std::string_view name);

/// JSON: {"schema": "1", "reports": [{"suite", "entries": [...]}], "all_pass": bool}.
std::string render_reports(const std::vector<SuiteReport>& reports, Format format);

/// Closed-form coefficients of r^a dr^b delta, one row per (family, k, l)
/// with l <= min(k, lmax). Markdown or JSON.
std::string render_prop35_table(unsigned kmax, unsigned lmax, Format format);

}  // namespace signumcalc
