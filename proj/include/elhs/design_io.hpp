#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "elhs/sample_set.hpp"

namespace elhs {

/// Coordinate formatted with 17 significant decimal digits, enough for
/// doubles to round-trip bit-exactly through text.
inline std::string format_coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Reads a design from CSV text: one sample per line, comma-separated
/// coordinates, '#' lines and blank lines skipped. Errors carry the
/// 1-based line number.
inline SampleSet read_design_csv(std::istream& in, const std::string& name) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<double> row;
        std::stringstream fields(line);
        std::string field;
        std::size_t col = 0;
        while (std::getline(fields, field, ',')) {
            const char* begin = field.c_str();
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
            if (end == begin || (end && *end != '\0')) {
                std::ostringstream oss;
                oss << name << ": line " << lineno << ", field " << col + 1
                    << ": cannot parse '" << field << "' as a number";
                throw std::runtime_error(oss.str());
            }
            row.push_back(v);
            ++col;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            std::ostringstream oss;
            oss << name << ": line " << lineno << ": row has " << row.size()
                << " values, expected " << rows.front().size();
            throw std::runtime_error(oss.str());
        }
        rows.push_back(std::move(row));
    }
    SampleSet set = SampleSet::from_rows(rows);
    if (auto err = validate(set)) {
        throw std::runtime_error(name + ": " + *err);
    }
    return set;
}

/// Reads a design from a JSON document {"p":..,"n":..,"samples":[[..]]}.
/// "meta" is accepted and ignored.
inline SampleSet read_design_json(std::istream& in, const std::string& name) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(name + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("samples") || !doc["samples"].is_array()) {
        throw std::runtime_error(name + ": expected an object with a 'samples' array");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(doc["samples"].size());
    for (const auto& row : doc["samples"]) {
        if (!row.is_array()) throw std::runtime_error(name + ": 'samples' rows must be arrays");
        rows.push_back(row.get<std::vector<double>>());
    }
    SampleSet set = SampleSet::from_rows(rows);
    if (doc.contains("n") && doc["n"].get<std::size_t>() != set.n()) {
        throw std::runtime_error(name + ": 'n' does not match the number of sample rows");
    }
    if (doc.contains("p") && doc["p"].get<std::size_t>() != set.p()) {
        throw std::runtime_error(name + ": 'p' does not match the sample row width");
    }
    if (auto err = validate(set)) {
        throw std::runtime_error(name + ": " + *err);
    }
    return set;
}

/// Reads a design, sniffing the format: a document whose first
/// non-whitespace character is '{' is JSON, anything else is CSV.
inline SampleSet read_design(std::istream& in, const std::string& name) {
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    if (c == '{') return read_design_json(in, name);
    return read_design_csv(in, name);
}

inline SampleSet read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return read_design(in, path);
}

inline void write_design_csv(std::ostream& out, const SampleSet& set) {
    for (std::size_t i = 0; i < set.n(); ++i) {
        for (std::size_t j = 0; j < set.p(); ++j) {
            if (j > 0) out << ',';
            out << format_coord(set(i, j));
        }
        out << '\n';
    }
}

inline void write_design_json(std::ostream& out, const SampleSet& set,
                              const nlohmann::json& meta = nlohmann::json::object()) {
    nlohmann::json doc;
    doc["p"] = set.p();
    doc["n"] = set.n();
    auto samples = nlohmann::json::array();
    for (std::size_t i = 0; i < set.n(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < set.p(); ++j) row.push_back(set(i, j));
        samples.push_back(std::move(row));
    }
    doc["samples"] = std::move(samples);
    doc["meta"] = meta;
    out << doc.dump(2) << '\n';
}

inline bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

/// Writes a design to `path`: JSON when the extension is .json, CSV
/// otherwise.
inline void write_design_file(const std::string& path, const SampleSet& set) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (has_json_extension(path)) {
        write_design_json(out, set);
    } else {
        write_design_csv(out, set);
    }
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace elhs
