#include "aisforge/csv.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "aisforge/errors.hpp"

namespace aisforge {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ',')) fields.push_back(trim(cur));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

int find_column(const std::vector<std::string>& header, const std::string& name,
                bool has_header) {
    if (!has_header) {
        try {
            return std::stoi(name);
        } catch (const std::exception&) {
            throw ConfigError("headerless schema requires numeric column index, got '" +
                              name + "'");
        }
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    throw ConfigError("column '" + name + "' not found in header");
}

double parse_double_strict(const std::string& s, std::size_t row) {
    if (s.empty()) throw ParseError(row, "empty numeric field");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ParseError(row, "unparsable number '" + s + "'");
    return v;
}

}  // namespace

PriceSeries load_price_csv(const std::filesystem::path& path, const CsvSchema& schema,
                           const std::string& asset_id, Frequency frequency) {
    std::ifstream in(path);
    if (!in.is_open())
        throw FileNotFound("cannot open '" + path.string() + "'");

    PriceSeries series;
    series.asset_id = asset_id.empty() ? path.stem().string() : asset_id;
    series.frequency = frequency;

    std::string line;
    int ts_col = -1;
    int close_col = -1;
    if (schema.has_header) {
        if (!std::getline(in, line))
            throw EmptySeries("'" + path.string() + "' is empty");
        const auto header = split_csv_line(line);
        ts_col = find_column(header, schema.timestamp_column, true);
        close_col = find_column(header, schema.close_column, true);
    } else {
        ts_col = find_column({}, schema.timestamp_column, false);
        close_col = find_column({}, schema.close_column, false);
    }

    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        const auto fields = split_csv_line(line);
        const auto need = static_cast<std::size_t>(std::max(ts_col, close_col));
        if (fields.size() <= need)
            throw ParseError(row, "too few columns");
        Timestamp ts;
        try {
            ts = parse_timestamp(fields[ts_col]);
        } catch (const Error& e) {
            throw ParseError(row, e.what());
        }
        const double price = parse_double_strict(fields[close_col], row);
        if (!(price > 0.0) || !std::isfinite(price))
            throw ParseError(row, "non-positive price " + fields[close_col]);
        series.timestamps.push_back(ts);
        series.prices.push_back(price);
    }

    if (series.size() < 2)
        throw EmptySeries("'" + path.string() + "' yielded fewer than 2 rows");
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series.timestamps[i] <= series.timestamps[i - 1])
            throw NonMonotonicTimestamps("'" + path.string() +
                                         "': timestamps not strictly increasing at data row " +
                                         std::to_string(i + 1));
    }
    return series;
}

void write_price_csv(const std::filesystem::path& path, const PriceSeries& series) {
    std::ofstream out(path);
    if (!out.is_open()) throw Error("cannot write '" + path.string() + "'");
    out << "timestamp,close\n";
    char buf[40];
    for (std::size_t i = 0; i < series.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", series.prices[i]);
        out << format_timestamp(series.timestamps[i]) << ',' << buf << '\n';
    }
}

void write_signals_csv(const std::filesystem::path& path, const SignalSeries& sig) {
    std::ofstream out(path);
    if (!out.is_open()) throw Error("cannot write '" + path.string() + "'");
    out << "timestamp,position,forecast\n";
    char buf[40];
    for (std::size_t i = 0; i < sig.size(); ++i) {
        out << format_timestamp(sig.timestamps[i]) << ',' << sig.positions[i] << ',';
        if (i < sig.forecasts.size() && std::isfinite(sig.forecasts[i])) {
            std::snprintf(buf, sizeof buf, "%.17g", sig.forecasts[i]);
            out << buf;
        }
        out << '\n';
    }
}

void write_equity_csv(const std::filesystem::path& path, const EquityLine& eq) {
    std::ofstream out(path);
    if (!out.is_open()) throw Error("cannot write '" + path.string() + "'");
    out << "timestamp,equity\n";
    char buf[40];
    for (std::size_t i = 0; i < eq.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", eq.values[i]);
        out << format_timestamp(eq.timestamps[i]) << ',' << buf << '\n';
    }
}

EquityLine read_equity_csv(const std::filesystem::path& path, double periods_per_year) {
    std::ifstream in(path);
    if (!in.is_open()) throw FileNotFound("cannot open '" + path.string() + "'");
    EquityLine eq;
    eq.periods_per_year = periods_per_year;
    std::string line;
    std::getline(in, line);  // header
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        const auto fields = split_csv_line(line);
        if (fields.size() < 2) throw ParseError(row, "expected timestamp,equity");
        eq.timestamps.push_back(parse_timestamp(fields[0]));
        eq.values.push_back(parse_double_strict(fields[1], row));
    }
    return eq;
}

}  // namespace aisforge
