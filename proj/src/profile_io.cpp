#include "fracdim/profile_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fracdim {

namespace {

void check_table(const ProfileTable& t) {
    if (t.columns.empty() || t.columns.size() != t.values.size())
        throw std::invalid_argument("ProfileTable: column names and value columns differ");
    for (const auto& col : t.values)
        if (col.size() != t.r.size())
            throw std::invalid_argument("ProfileTable: ragged columns");
    for (double x : t.r)
        if (!std::isfinite(x)) throw std::invalid_argument("ProfileTable: non-finite r");
    for (const auto& col : t.values)
        for (double x : col)
            if (!std::isfinite(x))
                throw std::invalid_argument("ProfileTable: non-finite value");
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

void append_number(std::string& s, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    s += buf;
}

}  // namespace

ProfileTable to_table(const SolutionProfile& p) {
    ProfileTable t;
    t.meta = p.meta;
    t.columns = {p.meta.field.empty() ? std::string("value") : p.meta.field};
    t.r = p.grid.nodes();
    t.values = {p.values};
    return t;
}

void write_csv(const ProfileTable& t, const std::string& path) {
    check_table(t);
    std::string body = "r";
    for (const auto& name : t.columns) {
        body += ',';
        body += name;
    }
    body += '\n';
    for (std::size_t i = 0; i < t.r.size(); ++i) {
        append_number(body, t.r[i]);
        for (const auto& col : t.values) {
            body += ',';
            append_number(body, col[i]);
        }
        body += '\n';
    }
    std::ofstream out = open_or_throw(path);
    out << body;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_json(const ProfileTable& t, const std::string& path) {
    check_table(t);
    nlohmann::json doc;
    doc["meta"] = {{"scenario", t.meta.scenario},
                   {"D", t.meta.D},
                   {"d", t.meta.d},
                   {"symmetry", t.meta.symmetry}};
    nlohmann::json cols = nlohmann::json::array();
    cols.push_back("r");
    for (const auto& name : t.columns) cols.push_back(name);
    doc["columns"] = cols;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < t.r.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(t.r[i]);
        for (const auto& col : t.values) row.push_back(col[i]);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    std::ofstream out = open_or_throw(path);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_file(const ProfileTable& t, const std::string& path, const std::string& format) {
    if (format == "csv")
        write_csv(t, path);
    else if (format == "json")
        write_json(t, path);
    else
        throw std::invalid_argument("unknown output format '" + format + "'");
}

}  // namespace fracdim
