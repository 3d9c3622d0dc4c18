#include "aisforge/series.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "aisforge/errors.hpp"

namespace aisforge {

std::string to_string(Frequency f) {
    return f == Frequency::daily ? "daily" : "hourly";
}

Frequency frequency_from_string(const std::string& s) {
    if (s == "daily") return Frequency::daily;
    if (s == "hourly") return Frequency::hourly;
    throw Error("unknown frequency: '" + s + "'");
}

void PriceSeries::validate() const {
    if (timestamps.size() != prices.size())
        throw Error("price/timestamp length mismatch for '" + asset_id + "'");
    if (timestamps.size() < 2)
        throw EmptySeries("price series '" + asset_id + "' has fewer than 2 rows");
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!(prices[i] > 0.0) || !std::isfinite(prices[i]))
            throw ParseError(i + 1, "non-positive or non-finite price");
    }
    for (std::size_t i = 1; i < timestamps.size(); ++i) {
        if (timestamps[i] <= timestamps[i - 1])
            throw NonMonotonicTimestamps("timestamps not strictly increasing at row " +
                                         std::to_string(i + 1) + " of '" + asset_id + "'");
    }
}

ReturnSeries compute_returns(const PriceSeries& prices) {
    if (prices.size() < 2)
        throw EmptySeries("need at least 2 prices to form returns");
    prices.validate();

    ReturnSeries out;
    out.asset_id = prices.asset_id;
    out.frequency = prices.frequency;
    const std::size_t n = prices.size() - 1;
    out.timestamps.reserve(n);
    out.log_returns.reserve(n);
    out.simple_returns.reserve(n);
    for (std::size_t i = 1; i < prices.size(); ++i) {
        const double ratio = prices.prices[i] / prices.prices[i - 1];
        out.timestamps.push_back(prices.timestamps[i]);
        out.log_returns.push_back(std::log(ratio));
        out.simple_returns.push_back(ratio - 1.0);
    }
    return out;
}

std::vector<ReturnSeries> align_intersection(const std::vector<ReturnSeries>& series) {
    if (series.size() < 2)
        throw Error("align_intersection needs at least 2 series");
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series[i].frequency != series[0].frequency)
            throw FrequencyMismatch("cannot intersect series of different frequencies");
    }

    std::unordered_set<Timestamp> common(series[0].timestamps.begin(),
                                         series[0].timestamps.end());
    for (std::size_t i = 1; i < series.size(); ++i) {
        std::unordered_set<Timestamp> next;
        next.reserve(common.size());
        for (Timestamp t : series[i].timestamps) {
            if (common.count(t)) next.insert(t);
        }
        common.swap(next);
    }
    if (common.empty())
        throw EmptyIntersection("no common timestamps across series");

    std::vector<ReturnSeries> out;
    out.reserve(series.size());
    for (const ReturnSeries& s : series) {
        ReturnSeries r;
        r.asset_id = s.asset_id;
        r.frequency = s.frequency;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!common.count(s.timestamps[i])) continue;
            r.timestamps.push_back(s.timestamps[i]);
            r.log_returns.push_back(s.log_returns[i]);
            r.simple_returns.push_back(s.simple_returns[i]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace aisforge
