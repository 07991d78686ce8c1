// dataset.hpp — column datasets with reproducible CSV/JSON serialization.
#pragma once

#include <string>
#include <vector>

namespace uswqed {

struct Dataset {
    std::string config_json;                  // canonical one-line JSON
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;    // each row matches columns
};

// 17 significant digits, locale independent, round-trips any finite double.
std::string format_double(double v);

std::string csv_string(const Dataset& d);
std::string json_string(const Dataset& d);

// Both writers go through a temporary file and an atomic rename, so readers
// never observe partial output.
void write_csv(const Dataset& d, const std::string& path);
void write_json(const Dataset& d, const std::string& path);

} // namespace uswqed
