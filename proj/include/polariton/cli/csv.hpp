#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polariton::cli {

struct Column {
    std::string name;
    std::string unit;  // empty → dimensionless, header is `name[]`
};

/// Rows of decimal values in grid order, with a provenance footer.
struct ResultTable {
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;
    std::uint64_t config_hash = 0;
    std::string version;

    /// Throws std::invalid_argument when the row width differs from the header.
    void add_row(std::vector<double> row);
};

/// Shortest decimal form that round-trips, at most 17 significant digits.
std::string format_number(double v);

std::string to_csv(const ResultTable& t);
ResultTable parse_csv(std::string_view text);

/// Writes the table; throws IoError on failure.
void write_csv(const std::string& path, const ResultTable& t);
ResultTable read_csv(const std::string& path);

}  // namespace polariton::cli
