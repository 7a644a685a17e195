#pragma once

#include <string>

#include <json.hpp>

#include "qsing/classify.hpp"

namespace qsing {

/// Classification report as a JSON document with a stable key order.
/// sing_locus_dim is an integer or the string "smooth"; gorenstein is
/// "true" | "false" | "indeterminate".
nlohmann::ordered_json report_to_json(const ClassificationReport& r);

/// Two-column human-readable rendering of the same fields.
std::string report_to_text(const ClassificationReport& r);

} // namespace qsing
