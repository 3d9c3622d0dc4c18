#pragma once

#include <filesystem>
#include <string>

#include "aisforge/series.hpp"

namespace aisforge {

// Column mapping for price CSVs. UTF-8, decimal point '.', ISO-8601
// timestamps. With has_header = false the column fields are 0-based
// indices given as strings ("0", "1").
struct CsvSchema {
    std::string timestamp_column = "timestamp";
    std::string close_column = "close";
    bool has_header = true;
};

PriceSeries load_price_csv(const std::filesystem::path& path,
                           const CsvSchema& schema = {},
                           const std::string& asset_id = "",
                           Frequency frequency = Frequency::daily);

void write_price_csv(const std::filesystem::path& path, const PriceSeries& series);

// timestamp,position,forecast — forecast blank when NaN.
void write_signals_csv(const std::filesystem::path& path, const SignalSeries& sig);

// timestamp,equity with full round-trip precision.
void write_equity_csv(const std::filesystem::path& path, const EquityLine& eq);
EquityLine read_equity_csv(const std::filesystem::path& path,
                           double periods_per_year = 252.0);

}  // namespace aisforge
