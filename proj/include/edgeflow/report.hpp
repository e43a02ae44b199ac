#pragma once

#include <string>

#include "json.hpp"

namespace edgeflow::report {

// Reports are ordered JSON documents: insertion order is preserved so the
// rendered text reads top to bottom the way the experiment built it.
using Json = nlohmann::ordered_json;

// Consistent scalar formatting for the text rendering (%.10g).
std::string format_number(double v);

// Nested key-value rendering: two spaces per level, arrays of objects drawn
// as "- " item blocks, scalar arrays on one line.
std::string to_text(const Json& doc);

void write_text_file(const Json& doc, const std::string& path);
void write_json_file(const Json& doc, const std::string& path);

// Copy of the document with every "timings" section removed, for comparing
// reports across runs (wall-clock values are the one non-reproducible part).
Json without_timings(const Json& doc);

}  // namespace edgeflow::report
