#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aisforge/timeutil.hpp"

namespace aisforge {

enum class Frequency { daily, hourly };

std::string to_string(Frequency f);
Frequency frequency_from_string(const std::string& s);

// Timestamped close prices for one asset at one frequency.
// Invariants: timestamps strictly increasing, all prices > 0, length >= 2
// for anything downstream of validation.
struct PriceSeries {
    std::string asset_id;
    Frequency frequency = Frequency::daily;
    std::vector<Timestamp> timestamps;
    std::vector<double> prices;

    std::size_t size() const { return timestamps.size(); }
    void validate() const;  // throws on any invariant violation
};

// Period returns, stamped at the later endpoint of each period: the return
// at timestamps[k] covers (source timestamp k, source timestamp k+1].
struct ReturnSeries {
    std::string asset_id;
    Frequency frequency = Frequency::daily;
    std::vector<Timestamp> timestamps;
    std::vector<double> log_returns;
    std::vector<double> simple_returns;

    std::size_t size() const { return timestamps.size(); }
};

ReturnSeries compute_returns(const PriceSeries& prices);

// Restrict every series to the intersection of their timestamp sets,
// preserving order. All inputs must share one frequency.
std::vector<ReturnSeries> align_intersection(const std::vector<ReturnSeries>& series);

// Per-timestamp position in {-1, 0, +1} plus the forecast that produced it.
// positions[k] is decided from information available at timestamps[k] and is
// applied to the return realized at the next return timestamp; forecasts[k]
// is the prediction of that next return (NaN when the strategy has none).
struct SignalSeries {
    std::string asset_id;
    std::vector<Timestamp> timestamps;
    std::vector<int> positions;
    std::vector<double> forecasts;

    std::size_t size() const { return timestamps.size(); }
};

// Compounded strategy value per timestamp, starting at 1.0.
struct EquityLine {
    std::vector<Timestamp> timestamps;
    std::vector<double> values;
    double periods_per_year = 252.0;

    std::size_t size() const { return timestamps.size(); }
};

}  // namespace aisforge
