#pragma once

#include <cstdint>
#include <vector>

#include "aisforge/series.hpp"

namespace aisforge::synth {

enum class GeneratorKind { gaussian_iid, ar1, arma_garch, sign_persistent, regime_switch };

GeneratorKind kind_from_string(const std::string& s);
std::string to_string(GeneratorKind k);

// Parameters must lie inside each process's stationarity region
// (|phi| < 1, alpha + beta < 1, probabilities in [0, 1]).
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::gaussian_iid;
    std::size_t length = 1000;
    std::uint64_t seed = 1;
    Frequency frequency = Frequency::daily;
    Timestamp start = 0;  // 0 -> default calendar start (2010-01-04)
    std::string asset_id = "synthetic";

    double mean = 0.0;      // gaussian_iid / sign_persistent magnitude mean
    double sigma = 0.01;    // innovation scale
    double phi = 0.5;       // ar1 coefficient
    // arma_garch: r_t = mu + ar*r_{t-1} + ma*eps_{t-1} + eps_t,
    // eps_t = sqrt(h_t) z_t, h_t = omega + alpha*eps_{t-1}^2 + beta*h_{t-1}
    double mu = 0.0;
    double ar = 0.0;
    double ma = 0.0;
    double omega = 1e-6;
    double alpha = 0.1;
    double beta = 0.85;
    std::size_t burn_in = 500;
    double flip_prob = 0.05;  // sign_persistent
    // regime_switch: two-state Markov chain over (mean, sigma) pairs
    double regime_mean2 = -0.001;
    double regime_sigma2 = 0.03;
    double switch_prob = 0.02;
};

// Generated series plus the latent truth used by oracle tests.
struct SyntheticSeries {
    ReturnSeries returns;
    std::vector<double> true_variance;   // conditional variance h_t
    std::vector<double> true_cond_mean;  // conditional mean of r_t given the past
    std::vector<int> true_state;         // sign / regime state where applicable
};

SyntheticSeries generate(const GeneratorSpec& spec);

// Weekday calendar: daily at midnight; hourly at 09:00..15:00 (7 bars/day).
std::vector<Timestamp> make_calendar(Timestamp start, std::size_t n, Frequency f);

// Compound a price path P_0 = initial, P_t = P_{t-1} * exp(r_t); the price
// series gets one extra leading timestamp.
PriceSeries prices_from_returns(const ReturnSeries& returns, double initial = 100.0);

}  // namespace aisforge::synth
