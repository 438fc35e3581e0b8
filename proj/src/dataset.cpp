#include "fxlab/dataset.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "fxlab/errors.hpp"

namespace fxlab {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

bool all_digits(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

struct ParsedKey {
    Period period;
    Frequency frequency;
};

std::optional<ParsedKey> parse_period_key(const std::string& key) {
    const std::size_t q = key.find("-Q");
    if (q != std::string::npos) {
        const std::string year_part = key.substr(0, q);
        const std::string sub_part = key.substr(q + 2);
        if (!all_digits(year_part) || sub_part.size() != 1 || sub_part[0] < '1' ||
            sub_part[0] > '4') {
            return std::nullopt;
        }
        ParsedKey parsed;
        parsed.period = Period{std::stoi(year_part), sub_part[0] - '0'};
        parsed.frequency = Frequency::Quarterly;
        return parsed;
    }
    if (!all_digits(key)) {
        return std::nullopt;
    }
    return ParsedKey{Period{std::stoi(key), 1}, Frequency::Annual};
}

std::optional<double> parse_cell(const std::string& raw) {
    const std::string cell = trim(raw);
    if (cell.empty()) {
        return std::nullopt;
    }
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + cell.size()) {
        throw std::invalid_argument(cell);
    }
    return value;
}

std::string line_prefix(const std::string& path, int line) {
    return path + ":" + std::to_string(line) + ": ";
}

} // namespace

Dataset::Dataset(std::string source, Frequency frequency,
                 std::vector<std::string> column_order,
                 std::map<std::string, TimeSeries> columns)
    : source_(std::move(source)),
      frequency_(frequency),
      column_order_(std::move(column_order)),
      columns_(std::move(columns)) {}

bool Dataset::has_column(const std::string& name) const {
    return columns_.find(name) != columns_.end();
}

const TimeSeries& Dataset::column(const std::string& name) const {
    const auto it = columns_.find(name);
    if (it == columns_.end()) {
        std::string available;
        for (const auto& col : column_order_) {
            if (!available.empty()) {
                available += ", ";
            }
            available += col;
        }
        throw DataError("dataset " + source_ + " has no column '" + name +
                        "' (available: " + available + ")");
    }
    return it->second;
}

Dataset load_csv(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw DataError("cannot open CSV file: " + path);
    }

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.size() < 2) {
        throw DataError(path + ": expected a header row and at least one data row");
    }

    const std::vector<std::string> header = split_row(lines.front());
    if (header.size() < 2) {
        throw DataError(path +
                        ":1: header must name a period column and at least one series");
    }
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t c = 1; c < header.size(); ++c) {
        const std::string name = trim(header[c]);
        if (name.empty()) {
            throw DataError(line_prefix(path, 1) + "header column " +
                            std::to_string(c + 1) + " has no name");
        }
        if (!seen.insert(name).second) {
            throw DataError(line_prefix(path, 1) + "duplicate column name '" + name +
                            "'");
        }
        names.push_back(name);
    }

    std::optional<Frequency> frequency;
    std::optional<Period> start;
    long previous_index = 0;
    std::vector<std::vector<std::optional<double>>> values(names.size());

    for (std::size_t row = 1; row < lines.size(); ++row) {
        const int line_no = static_cast<int>(row) + 1;
        const std::vector<std::string> cells = split_row(lines[row]);
        if (cells.size() != header.size()) {
            throw DataError(line_prefix(path, line_no) + "expected " +
                            std::to_string(header.size()) + " cells, found " +
                            std::to_string(cells.size()));
        }

        const std::string key = trim(cells.front());
        const auto parsed = parse_period_key(key);
        if (!parsed) {
            throw DataError(line_prefix(path, line_no) + "malformed period key '" +
                            key + "'");
        }
        if (!frequency) {
            frequency = parsed->frequency;
            start = parsed->period;
        } else if (parsed->frequency != *frequency) {
            throw DataError(line_prefix(path, line_no) + "period key '" + key +
                            "' does not match the " +
                            std::string(*frequency == Frequency::Quarterly
                                            ? "quarterly"
                                            : "annual") +
                            " frequency of earlier rows");
        }

        const long index = period_index(*frequency, parsed->period);
        if (!values.front().empty()) {
            if (index == previous_index) {
                throw DataError(line_prefix(path, line_no) + "duplicate period '" +
                                key + "'");
            }
            if (index < previous_index) {
                throw DataError(line_prefix(path, line_no) + "out-of-order period '" +
                                key + "'");
            }
            for (long gap = previous_index + 1; gap < index; ++gap) {
                for (auto& column : values) {
                    column.push_back(std::nullopt);
                }
            }
        }
        previous_index = index;

        for (std::size_t c = 0; c < names.size(); ++c) {
            try {
                values[c].push_back(parse_cell(cells[c + 1]));
            } catch (const std::invalid_argument& bad) {
                throw DataError(line_prefix(path, line_no) + "column '" + names[c] +
                                "' has non-numeric value '" +
                                std::string(bad.what()) + "'");
            }
        }
    }

    std::map<std::string, TimeSeries> columns;
    for (std::size_t c = 0; c < names.size(); ++c) {
        columns.emplace(names[c],
                        TimeSeries(names[c], *frequency, *start, values[c]));
    }
    return Dataset(path, *frequency, names, std::move(columns));
}

} // namespace fxlab
