#include "edgeflow/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "edgeflow/errors.hpp"

namespace edgeflow::report {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

namespace {

std::string scalar_to_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_null()) return "null";
    return v.dump();  // integers
}

bool is_scalar_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

void render(const Json& v, std::ostringstream& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
                out << pad << key << ":\n";
                render(value, out, depth + 1);
            } else if (value.is_array()) {
                out << pad << key << ":";
                for (const auto& e : value) out << ' ' << scalar_to_text(e);
                out << '\n';
            } else {
                out << pad << key << ": " << scalar_to_text(value) << '\n';
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            out << pad << "-\n";
            render(e, out, depth + 1);
        }
    } else {
        out << pad << scalar_to_text(v) << '\n';
    }
}

}  // namespace

std::string to_text(const Json& doc) {
    std::ostringstream out;
    render(doc, out, 0);
    return out.str();
}

void write_text_file(const Json& doc, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << to_text(doc);
    if (!f) throw IoError("write failed: " + path);
}

void write_json_file(const Json& doc, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << doc.dump(2) << '\n';
    if (!f) throw IoError("write failed: " + path);
}

Json without_timings(const Json& doc) {
    Json out = doc;
    if (out.is_object()) {
        out.erase("timings");
        for (auto& [key, value] : out.items()) {
            (void)key;
            if (value.is_object() || value.is_array()) value = without_timings(value);
        }
    } else if (out.is_array()) {
        for (auto& value : out)
            if (value.is_object() || value.is_array()) value = without_timings(value);
    }
    return out;
}

}  // namespace edgeflow::report
