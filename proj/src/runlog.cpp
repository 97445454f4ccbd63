#include "arena/runlog.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace arena {

const std::string* LogEvent::get(std::string_view key) const noexcept {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

void RunLog::add(std::string type,
                 std::vector<std::pair<std::string, std::string>> fields) {
    events.push_back({std::move(type), std::move(fields)});
}

void RunLog::write(std::ostream& out) const {
    for (const auto& e : events) {
        out << e.type;
        for (const auto& [k, v] : e.fields) out << ' ' << k << '=' << v;
        out << '\n';
    }
}

std::string RunLog::to_string() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

std::string log_num(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

std::string log_num(std::uint64_t value) {
    return std::to_string(value);
}

}  // namespace arena
