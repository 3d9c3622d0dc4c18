#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aisforge/series.hpp"

namespace aisforge::garch {

// ARMA orders for the conditional mean; integration order is fixed at 0 and
// the variance equation is always GARCH(1,1).
struct Spec {
    int p = 0;
    int q = 0;
    bool operator==(const Spec&) const = default;
};

enum class Criterion { aic, bic, hqc };
Criterion criterion_from_string(const std::string& s);
std::string to_string(Criterion c);

struct Criteria {
    double aic = 0.0;
    double bic = 0.0;
    double hqc = 0.0;
    double get(Criterion c) const;
};

// Freely estimated parameters: mu, omega, alpha, beta plus p + q.
int param_count(const Spec& spec);

Criteria information_criteria(double loglik, int k, std::size_t n);

// Gaussian quasi-maximum-likelihood estimate on one window of log returns.
// Stationarity constraints hold at any reported optimum: omega > 0,
// alpha, beta >= 0, alpha + beta < 1.
struct Fit {
    Spec spec;
    double mu = 0.0;
    std::vector<double> phi;    // size p
    std::vector<double> theta;  // size q
    double omega = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double loglik = 0.0;
    Criteria ic;
    bool converged = false;
    std::size_t n_obs = 0;
};

// Conditional likelihood conventions: h_0 = sample variance of the window,
// pre-sample residuals 0, pre-sample returns replaced by the window mean.
// Windows shorter than 50 + p + q come back unconverged without estimation.
Fit fit(std::span<const double> returns, Spec spec, const Fit* warm_start = nullptr);

// Log-likelihood of fixed parameters on a window; exposed for diagnostics.
double log_likelihood(std::span<const double> returns, const Fit& params);

// Exhaustive (p,q) grid search minimizing the criterion over converged fits.
// Ties break toward smaller p+q, then smaller p. jobs > 1 fans the grid out
// over that many threads.
Spec select_orders(std::span<const double> returns, Criterion criterion = Criterion::aic,
                   int pmax = 5, int qmax = 5, int jobs = 1);

// Conditional mean one step past the end of `recent`. Residuals are
// reconstructed over the whole span with the fit's conventions, so pass the
// estimation window (or a superset of its tail).
double forecast_one_step(const Fit& fit, std::span<const double> recent);

struct RollingConfig {
    std::size_t first_train = 252;  // out-of-sample starts at this return index
    Criterion criterion = Criterion::aic;
    int pmax = 5;
    int qmax = 5;
    bool expanding = true;           // false: trailing window of rolling_window obs
    std::size_t rolling_window = 756;
    int jobs = 1;
};

struct RollingEntry {
    Timestamp timestamp = 0;  // decision time
    Spec spec;
    double mu = 0.0;
    double omega = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double forecast = 0.0;
    bool refit_converged = false;
    bool fallback = false;    // last available model used instead of a fresh fit
    bool reselected = false;  // select_orders ran on this decision day
};

struct RollingForecastLog {
    std::vector<RollingEntry> entries;
};

// Walk-forward driver: coefficients are re-estimated every out-of-sample day
// (warm-started from the previous fit); orders are re-selected on the first
// decision day of every calendar quarter. Fit failures fall back to the last
// converged fit; a day with no usable model ever seen emits position 0.
std::pair<SignalSeries, RollingForecastLog> rolling_signal(const ReturnSeries& returns,
                                                           const RollingConfig& cfg);

// timestamp,p,q,mu,omega,alpha,beta,forecast,fallback
std::string rolling_log_csv(const RollingForecastLog& log);

}  // namespace aisforge::garch
