#include "arena/strategy_file.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace arena {

namespace {

std::string fmt_param(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_param_list(std::string_view text) {
    std::vector<double> out;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    while (p < end) {
        while (p < end && *p == ' ') ++p;
        if (p >= end) break;
        char* next = nullptr;
        const double v = std::strtod(p, &next);
        if (next == p) throw std::runtime_error("bad parameter value in strategy file");
        out.push_back(v);
        p = next;
    }
    return out;
}

}  // namespace

std::string render_strategy(const StrategyFile& file) {
    std::string out;
    out += kStrategyMagic;
    out += "\ngame: ";
    out += game_name(file.game);
    out += "\nparams:";
    for (double v : file.params) {
        out += ' ';
        out += fmt_param(v);
    }
    out += '\n';
    for (const auto& [key, value] : file.meta) {
        out += "meta.";
        out += key;
        out += ": ";
        out += value;
        out += '\n';
    }
    return out;
}

StrategyFile parse_strategy(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;

    if (!std::getline(in, line) || line != kStrategyMagic)
        throw std::runtime_error("not a po-arena strategy file");

    StrategyFile file;
    bool have_game = false, have_params = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("game: ", 0) == 0) {
            const auto game = game_from_name(line.substr(6));
            if (!game) throw std::runtime_error("unknown game id: " + line.substr(6));
            file.game = *game;
            have_game = true;
        } else if (line.rfind("params:", 0) == 0) {
            file.params = parse_param_list(std::string_view(line).substr(7));
            have_params = true;
        } else if (line.rfind("meta.", 0) == 0) {
            const auto sep = line.find(": ");
            if (sep == std::string::npos || sep <= 5)
                throw std::runtime_error("malformed meta line: " + line);
            file.meta.emplace_back(line.substr(5, sep - 5), line.substr(sep + 2));
        } else {
            throw std::runtime_error("unrecognized strategy file line: " + line);
        }
    }
    if (!have_game || !have_params)
        throw std::runtime_error("strategy file is missing game or params");
    return file;
}

StrategyFile load_strategy(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    StrategyFile file = parse_strategy(buf.str());
    if (file.params.size() != param_count(file.game))
        throw std::runtime_error(path.string() + ": " +
                                 std::string(game_name(file.game)) + " takes " +
                                 std::to_string(param_count(file.game)) +
                                 " parameters, file has " +
                                 std::to_string(file.params.size()));
    return file;
}

void save_strategy(const std::filesystem::path& path, const StrategyFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << render_strategy(file);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace arena
