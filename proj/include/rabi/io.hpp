#pragma once

#include <stdexcept>
#include <string>

#include "rabi/analysis.hpp"

namespace rabi {

// Shortest decimal form that parses back to the same double (to_chars),
// so repeated runs and the CSV/JSON encodings agree exactly.
std::string format_double(double x);

// CSV with header g,method,rank,branch,N,energy_over_omega0 and LF line
// endings. Exact rows leave branch and N empty.
std::string to_csv(const SweepTable& table);

// JSON object {"spec": {...}, "rows": [...]}; rows carry the same fields
// as the CSV (branch/N null on exact rows).
std::string to_json(const SweepTable& table);

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to the path, or to stdout when path is empty. Throws IoError on
// failure to open or write.
void write_output(const std::string& path, const std::string& content);

}  // namespace rabi
