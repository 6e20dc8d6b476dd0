#ifndef FGM_CSV_HPP
#define FGM_CSV_HPP

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "model.hpp"

namespace fgm {

namespace detail {

inline std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline double parse_coordinate(std::string_view field, std::size_t line, const char* name) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw DataError(line, std::string("non-numeric ") + name + " value '" + std::string(field) + "'");
    if (!std::isfinite(value)) throw DataError(line, std::string("non-finite ") + name + " value");
    if (value < 0.0) throw DataError(line, std::string("negative ") + name + " value");
    return value;
}

}  // namespace detail

/// Reads `x,y` CSV. Blank lines are ignored; any other bad row raises DataError.
inline Dataset read_csv(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    bool header_seen = false;
    std::vector<Observation> obs;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = detail::trim(raw);
        if (!header_seen) {
            if (text != "x,y") throw DataError(line, "expected header 'x,y'");
            header_seen = true;
            continue;
        }
        if (text.empty()) continue;
        const auto comma = text.find(',');
        if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
            throw DataError(line, "expected exactly two fields");
        const double x = detail::parse_coordinate(text.substr(0, comma), line, "x");
        const double y = detail::parse_coordinate(text.substr(comma + 1), line, "y");
        obs.emplace_back(x, y);
    }
    if (!header_seen) throw DataError(1, "missing header 'x,y'");
    return Dataset(std::move(obs));
}

inline Dataset read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    return read_csv(in);
}

/// Writes shortest round-trip decimal literals.
inline void write_csv(std::ostream& out, const Dataset& data) {
    auto put = [&out](double v) {
        char buf[32];
        const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
        out.write(buf, end - buf);
    };
    out << "x,y\n";
    for (const auto& o : data.observations()) {
        put(o.x());
        out << ',';
        put(o.y());
        out << '\n';
    }
}

inline void write_csv(const std::filesystem::path& path, const Dataset& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_csv(out, data);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace fgm

#endif  // FGM_CSV_HPP
