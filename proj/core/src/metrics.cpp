#include "aisforge/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include <nlohmann/json.hpp>

#include "aisforge/errors.hpp"

namespace aisforge {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> period_returns(const EquityLine& eq) {
    std::vector<double> r;
    r.reserve(eq.size() > 1 ? eq.size() - 1 : 0);
    for (std::size_t i = 1; i < eq.size(); ++i)
        r.push_back(eq.values[i] / eq.values[i - 1] - 1.0);
    return r;
}

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

double annualized_return_compounded(const EquityLine& eq) {
    if (eq.size() < 2) throw TooShort("equity line has no return periods");
    const double n = static_cast<double>(eq.size() - 1);
    return std::pow(eq.values.back() / eq.values.front(), eq.periods_per_year / n) - 1.0;
}

double annualized_std(std::span<const double> simple_returns, double periods_per_year) {
    const std::size_t n = simple_returns.size();
    if (n < 2) throw TooShort("need at least 2 returns for a standard deviation");
    double mean = 0.0;
    for (double r : simple_returns) mean += r;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double r : simple_returns) ss += (r - mean) * (r - mean);
    return std::sqrt(periods_per_year) * std::sqrt(ss / static_cast<double>(n - 1));
}

double max_drawdown(const EquityLine& eq) {
    if (eq.size() == 0) return 0.0;
    double peak = eq.values[0];
    double worst = 0.0;
    for (double v : eq.values) {
        if (v > peak) peak = v;
        const double dd = (peak - v) / peak;
        if (dd > worst) worst = dd;
    }
    return worst;
}

double max_loss_duration(const EquityLine& eq) {
    if (eq.size() == 0) return 0.0;
    double peak = eq.values[0];
    std::size_t peak_idx = 0;
    bool below_seen = false;
    std::size_t best = 0;
    for (std::size_t t = 1; t < eq.size(); ++t) {
        const double v = eq.values[t];
        if (v > peak) {
            if (below_seen && t - peak_idx > best) best = t - peak_idx;
            peak = v;
            peak_idx = t;
            below_seen = false;
        } else if (v == peak) {
            // Time spent flat at the peak is not loss time; equality does not
            // end an ongoing drawdown (recovery requires a strictly higher value).
            if (!below_seen) peak_idx = t;
        } else {
            below_seen = true;
        }
    }
    if (below_seen && eq.size() - 1 - peak_idx > best) best = eq.size() - 1 - peak_idx;
    return static_cast<double>(best) / eq.periods_per_year;
}

InformationRatios information_ratios(double arc, double asd, double md, double mld) {
    InformationRatios out;
    out.ir1 = asd > 0.0 ? arc / asd : kNaN;
    out.ir2 = asd * md > 0.0 ? arc * arc * (arc < 0 ? -1.0 : (arc > 0 ? 1.0 : 0.0)) / (asd * md)
                             : kNaN;
    out.ir3 = asd * md * mld > 0.0 ? arc * arc * arc / (asd * md * mld) : kNaN;
    return out;
}

std::size_t count_trades(const SignalSeries& sig) {
    if (sig.size() == 0) return 0;
    std::size_t trades = 0;
    int prev = 0;  // flat before entry
    for (int p : sig.positions) {
        if (p != prev) ++trades;
        prev = p;
    }
    if (prev != 0) ++trades;  // implicit exit to flat
    return trades;
}

PerfReport performance_report(const EquityLine& eq, const SignalSeries& sig) {
    return performance_report(eq, count_trades(sig));
}

PerfReport performance_report(const EquityLine& eq, std::size_t n_trades) {
    EquityLine norm = eq;
    if (!norm.values.empty() && norm.values.front() != 1.0) {
        const double scale = 1.0 / norm.values.front();
        for (double& v : norm.values) v *= scale;
    }
    PerfReport r;
    r.arc = annualized_return_compounded(norm);
    const auto rets = period_returns(norm);
    r.asd = annualized_std(rets, norm.periods_per_year);
    r.md = max_drawdown(norm);
    r.mld = max_loss_duration(norm);
    const auto ir = information_ratios(r.arc, r.asd, r.md, r.mld);
    r.ir1 = ir.ir1;
    r.ir2 = ir.ir2;
    r.ir3 = ir.ir3;
    r.n_obs = norm.size();
    r.n_trades = n_trades;
    return r;
}

std::string report_csv_header() {
    return "aRC,aSD,MD,MLD,IR1,IR2,IR3,nObs,nTrades";
}

std::string report_csv_row(const PerfReport& r) {
    std::string out;
    out += fmt(r.arc);
    out += ',';
    out += fmt(r.asd);
    out += ',';
    out += fmt(r.md);
    out += ',';
    out += fmt(r.mld);
    out += ',';
    out += fmt(r.ir1);
    out += ',';
    out += fmt(r.ir2);
    out += ',';
    out += fmt(r.ir3);
    out += ',';
    out += std::to_string(r.n_obs);
    out += ',';
    out += std::to_string(r.n_trades);
    return out;
}

std::string report_json(const PerfReport& r) {
    nlohmann::ordered_json j;
    j["aRC"] = r.arc;
    j["aSD"] = r.asd;
    j["MD"] = r.md;
    j["MLD"] = r.mld;
    j["IR1"] = r.ir1;
    j["IR2"] = r.ir2;
    j["IR3"] = r.ir3;
    j["nObs"] = r.n_obs;
    j["nTrades"] = r.n_trades;
    return j.dump(2);
}

PerfReport report_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    PerfReport r;
    auto num = [&](const char* key) {
        return j.at(key).is_null() ? kNaN : j.at(key).get<double>();
    };
    r.arc = num("aRC");
    r.asd = num("aSD");
    r.md = num("MD");
    r.mld = num("MLD");
    r.ir1 = num("IR1");
    r.ir2 = num("IR2");
    r.ir3 = num("IR3");
    r.n_obs = j.at("nObs").get<std::size_t>();
    r.n_trades = j.at("nTrades").get<std::size_t>();
    return r;
}

}  // namespace aisforge
