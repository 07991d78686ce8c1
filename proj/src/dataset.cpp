// dataset.cpp — deterministic CSV/JSON writers with atomic replacement.
#include "uswqed/dataset.hpp"

#include <json.hpp>

#include <unistd.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "uswqed/version.hpp"

namespace uswqed {
namespace {

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, res.ptr);
}

std::string csv_string(const Dataset& d) {
    if (d.columns.empty()) throw std::invalid_argument("dataset needs at least one column");
    std::string out = "# uswqed v";
    out += kVersion;
    out += " config=";
    out += d.config_json;
    out += '\n';
    for (std::size_t i = 0; i < d.columns.size(); ++i) {
        if (i > 0) out += ',';
        out += d.columns[i];
    }
    out += '\n';
    for (const auto& row : d.rows) {
        if (row.size() != d.columns.size())
            throw std::invalid_argument("row width does not match the column count");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string json_string(const Dataset& d) {
    if (d.columns.empty()) throw std::invalid_argument("dataset needs at least one column");
    nlohmann::json j;
    j["tool"] = "uswqed";
    j["version"] = kVersion;
    j["config"] = nlohmann::json::parse(d.config_json);
    j["columns"] = d.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : d.rows) {
        if (row.size() != d.columns.size())
            throw std::invalid_argument("row width does not match the column count");
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump() + "\n";
}

void write_csv(const Dataset& d, const std::string& path) {
    write_atomic(path, csv_string(d));
}

void write_json(const Dataset& d, const std::string& path) {
    write_atomic(path, json_string(d));
}

} // namespace uswqed
