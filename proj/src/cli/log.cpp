#include "polariton/cli/log.hpp"

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>

namespace polariton::cli {

namespace {

const char* level_name(Level l) {
    switch (l) {
        case Level::Debug: return "DEBUG";
        case Level::Info: return "INFO";
        case Level::Warn: return "WARN";
        case Level::Error: return "ERROR";
    }
    return "INFO";
}

const char* level_color(Level l) {
    switch (l) {
        case Level::Debug: return "\033[2m";
        case Level::Info: return "\033[32m";
        case Level::Warn: return "\033[33m";
        case Level::Error: return "\033[31m";
    }
    return "";
}

std::string quote_if_needed(std::string_view v) {
    if (!v.empty() && v.find_first_of(" \t\"=") == std::string_view::npos) return std::string(v);
    std::string out = "\"";
    for (char c : v) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::mutex& log_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Logger::Logger(std::ostream& os, bool color) : os_(&os), color_(color) {}

void Logger::log(Level level, std::string_view event, std::initializer_list<Field> fields) {
    if (level < min_level_) return;
    std::ostringstream line;
    if (color_) line << level_color(level);
    line << level_name(level);
    if (color_) line << "\033[0m";
    line << " event=" << quote_if_needed(event);
    for (const auto& [k, v] : fields) line << ' ' << k << '=' << quote_if_needed(v);
    line << '\n';
    std::lock_guard<std::mutex> lock(log_mutex());
    *os_ << line.str() << std::flush;
}

Logger& logger() {
    static Logger instance(std::cerr, std::getenv("NO_COLOR") == nullptr && isatty(2) == 1);
    return instance;
}

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

}  // namespace polariton::cli
