#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "aisforge/series.hpp"

namespace aisforge {

// Full risk-adjusted metric suite for one equity line. Fractions throughout
// (0.10 = 10%/year), MLD in years. Ratios are NaN when a denominator is zero.
struct PerfReport {
    double arc = 0.0;   // annualized return compounded
    double asd = 0.0;   // annualized standard deviation
    double md = 0.0;    // maximum drawdown, in [0, 1)
    double mld = 0.0;   // maximum loss duration, years
    double ir1 = 0.0;   // aRC / aSD
    double ir2 = 0.0;   // aRC^2 * sign(aRC) / (aSD * MD)
    double ir3 = 0.0;   // aRC^3 / (aSD * MD * MLD)
    std::size_t n_obs = 0;
    std::size_t n_trades = 0;
};

struct InformationRatios {
    double ir1 = 0.0;
    double ir2 = 0.0;
    double ir3 = 0.0;
};

// (EQ_n / EQ_0)^(periods_per_year / n) - 1, n = number of return periods.
double annualized_return_compounded(const EquityLine& eq);

// Sample standard deviation of period simple returns, scaled by
// sqrt(periods_per_year).
double annualized_std(std::span<const double> simple_returns, double periods_per_year);

// sup over t1 <= t2 of (EQ_t1 - EQ_t2) / EQ_t1; 0 for non-decreasing lines.
double max_drawdown(const EquityLine& eq);

// Longest stretch, in years, from a running-maximum peak to the first
// strictly higher value; a drawdown never recovered counts through the final
// timestamp. Stretches containing no below-peak observation contribute 0.
double max_loss_duration(const EquityLine& eq);

// Inputs as fractions, MLD in years. Division by zero yields NaN, not a throw.
InformationRatios information_ratios(double arc, double asd, double md, double mld);

// Number of position transitions, with an implicit flat position before the
// first and after the last timestamp. A constant long series counts 2.
std::size_t count_trades(const SignalSeries& sig);

PerfReport performance_report(const EquityLine& eq, const SignalSeries& sig);
PerfReport performance_report(const EquityLine& eq, std::size_t n_trades);

// Field names, in order: aRC,aSD,MD,MLD,IR1,IR2,IR3,nObs,nTrades.
std::string report_csv_header();
std::string report_csv_row(const PerfReport& r);
std::string report_json(const PerfReport& r);  // one JSON object, same field names
PerfReport report_from_json(const std::string& text);

}  // namespace aisforge
