#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arena {

// One optimizer event: a type tag plus ordered key=value fields.
struct LogEvent {
    std::string type;
    std::vector<std::pair<std::string, std::string>> fields;

    const std::string* get(std::string_view key) const noexcept;
};

// Append-only record of an optimizer run. Serialized one event per line as
// "<type> <key>=<value> ...". Contains no wall-clock data, so identical runs
// serialize to identical bytes.
struct RunLog {
    std::vector<LogEvent> events;
    std::uint64_t games_played = 0;

    void add(std::string type,
             std::vector<std::pair<std::string, std::string>> fields);
    void write(std::ostream&) const;
    std::string to_string() const;
};

std::string log_num(double value);         // short round-trippable float text
std::string log_num(std::uint64_t value);

}  // namespace arena
