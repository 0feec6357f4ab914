#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace polariton::cli {

enum class Level { Debug, Info, Warn, Error };

using Field = std::pair<std::string_view, std::string>;

/// Writes `LEVEL event=<name> key=value ...` lines. Values containing spaces,
/// quotes or '=' are double-quoted.
class Logger {
public:
    Logger(std::ostream& os, bool color);

    void log(Level level, std::string_view event, std::initializer_list<Field> fields = {});
    void set_min_level(Level level) { min_level_ = level; }

private:
    std::ostream* os_;
    bool color_;
    Level min_level_ = Level::Info;
};

/// Process-wide logger on stderr; color only when stderr is a terminal and NO_COLOR is unset.
Logger& logger();

std::string format_value(double v);

}  // namespace polariton::cli
