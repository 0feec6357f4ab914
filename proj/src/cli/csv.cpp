#include "polariton/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "polariton/cli/config.hpp"

namespace polariton::cli {

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " values, expected " +
                                    std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

std::string to_csv(const ResultTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i].name + "[" + t.columns[i].unit + "]";
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    char hash[17];
    auto [ptr, ec] = std::to_chars(hash, hash + sizeof hash, t.config_hash, 16);
    (void)ec;
    out += "# config_hash=" + std::string(hash, ptr) + " version=" + t.version + '\n';
    return out;
}

namespace {

double parse_cell(std::string_view s, std::size_t line) {
    if (s == "nan") return std::nan("");
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t c = line.find(',', start);
        out.push_back(line.substr(start, c == std::string_view::npos ? std::string_view::npos : c - start));
        if (c == std::string_view::npos) break;
        start = c + 1;
    }
    return out;
}

}  // namespace

ResultTable parse_csv(std::string_view text) {
    ResultTable t;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view body = line.substr(1);
            const auto h = body.find("config_hash=");
            const auto v = body.find("version=");
            if (h != std::string_view::npos) {
                const std::string_view hv = body.substr(h + 12, body.find(' ', h) - h - 12);
                std::from_chars(hv.data(), hv.data() + hv.size(), t.config_hash, 16);
            }
            if (v != std::string_view::npos) t.version = std::string(body.substr(v + 8));
            continue;
        }
        if (header) {
            for (std::string_view cell : split(line)) {
                const auto lb = cell.find('[');
                if (lb == std::string_view::npos || cell.back() != ']') {
                    throw ConfigError("csv header cell '" + std::string(cell) + "' lacks [unit]");
                }
                t.columns.push_back({std::string(cell.substr(0, lb)),
                                     std::string(cell.substr(lb + 1, cell.size() - lb - 2))});
            }
            header = false;
            continue;
        }
        std::vector<double> row;
        for (std::string_view cell : split(line)) row.push_back(parse_cell(cell, line_no));
        if (row.size() != t.columns.size()) {
            throw ConfigError("csv line " + std::to_string(line_no) + ": column count mismatch");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_csv(const std::string& path, const ResultTable& t) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const std::string text = to_csv(t);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write to '" + path + "' failed");
}

ResultTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str());
}

}  // namespace polariton::cli
