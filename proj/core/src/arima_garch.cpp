#include "aisforge/arima_garch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>

#include "aisforge/errors.hpp"
#include "aisforge/optim.hpp"

namespace aisforge::garch {

namespace {

constexpr double kLog2Pi = 1.8378770664093453;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxOrder = 5;
constexpr std::size_t kMinWindowBase = 50;

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double p) {
    const double q = std::clamp(p, 1e-8, 1.0 - 1e-8);
    return std::log(q / (1.0 - q));
}

struct WindowStats {
    double mean = 0.0;
    double var = 0.0;
};

WindowStats window_stats(std::span<const double> r) {
    WindowStats s;
    for (double v : r) s.mean += v;
    s.mean /= static_cast<double>(r.size());
    for (double v : r) s.var += (v - s.mean) * (v - s.mean);
    s.var /= static_cast<double>(r.size());
    return s;
}

struct NaturalParams {
    double mu = 0.0;
    double phi[kMaxOrder] = {};
    double theta[kMaxOrder] = {};
    double omega = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Optimizer vector layout: [mu, phi_1..p, theta_1..q, w, a, b] with
// omega = exp(w), alpha + beta = sigmoid(a), alpha fraction = sigmoid(b).
NaturalParams unpack(const Eigen::VectorXd& x, const Spec& spec) {
    NaturalParams n;
    n.mu = x[0];
    for (int i = 0; i < spec.p; ++i) n.phi[i] = x[1 + i];
    for (int j = 0; j < spec.q; ++j) n.theta[j] = x[1 + spec.p + j];
    const int base = 1 + spec.p + spec.q;
    n.omega = std::exp(std::min(x[base], 20.0));
    const double persistence = sigmoid(x[base + 1]);
    const double fraction = sigmoid(x[base + 2]);
    n.alpha = persistence * fraction;
    n.beta = persistence * (1.0 - fraction);
    return n;
}

Eigen::VectorXd pack(const Spec& spec, double mu, const double* phi, const double* theta,
                     double omega, double alpha, double beta) {
    Eigen::VectorXd x(1 + spec.p + spec.q + 3);
    x[0] = mu;
    for (int i = 0; i < spec.p; ++i) x[1 + i] = phi ? phi[i] : 0.0;
    for (int j = 0; j < spec.q; ++j) x[1 + spec.p + j] = theta ? theta[j] : 0.0;
    const int base = 1 + spec.p + spec.q;
    x[base] = std::log(std::max(omega, 1e-300));
    const double persistence = alpha + beta;
    x[base + 1] = logit(persistence);
    x[base + 2] = logit(persistence > 0 ? alpha / persistence : 0.5);
    return x;
}

double neg_loglik(std::span<const double> r, const Spec& spec, const NaturalParams& np,
                  double rbar, double var0) {
    const std::size_t n = r.size();
    double nll = 0.0;
    double h = var0;
    double eps_lag[kMaxOrder] = {};  // eps_lag[j] = residual at t-1-j
    for (std::size_t t = 0; t < n; ++t) {
        double mean_t = np.mu;
        for (int i = 1; i <= spec.p; ++i)
            mean_t += np.phi[i - 1] * (t >= static_cast<std::size_t>(i) ? r[t - i] : rbar);
        for (int j = 1; j <= spec.q; ++j) mean_t += np.theta[j - 1] * eps_lag[j - 1];
        if (t > 0) h = np.omega + np.alpha * eps_lag[0] * eps_lag[0] + np.beta * h;
        if (!(h > 0.0) || !std::isfinite(h)) return kInf;
        const double eps = r[t] - mean_t;
        if (!std::isfinite(eps)) return kInf;
        nll += 0.5 * (kLog2Pi + std::log(h) + eps * eps / h);
        for (int j = kMaxOrder - 1; j >= 1; --j) eps_lag[j] = eps_lag[j - 1];
        eps_lag[0] = eps;
    }
    return std::isfinite(nll) ? nll : kInf;
}

Fit fit_impl(std::span<const double> returns, Spec spec, const Fit* warm,
             const Fit* base00);

Fit make_unconverged(Spec spec, std::size_t n) {
    Fit f;
    f.spec = spec;
    f.loglik = -kInf;
    f.ic = Criteria{kInf, kInf, kInf};
    f.converged = false;
    f.n_obs = n;
    return f;
}

Fit fit_impl(std::span<const double> returns, Spec spec, const Fit* warm,
             const Fit* base00) {
    const std::size_t n = returns.size();
    for (double v : returns) {
        if (!std::isfinite(v)) throw NonFiniteInput("non-finite return in fit window");
    }
    if (spec.p < 0 || spec.p > kMaxOrder || spec.q < 0 || spec.q > kMaxOrder)
        throw InvalidParameters("ARMA orders must lie in [0, 5]");
    if (n < kMinWindowBase + static_cast<std::size_t>(spec.p + spec.q))
        return make_unconverged(spec, n);

    const WindowStats stats = window_stats(returns);
    if (stats.var < 1e-18)
        throw DegenerateWindow("zero-variance fit window");

    auto objective = [&](const Eigen::VectorXd& x) {
        return neg_loglik(returns, spec, unpack(x, spec), stats.mean, stats.var);
    };

    // Start points, tried in order until one converges: warm start from a
    // previous fit of the same spec, the (0,0) optimum with zeroed ARMA
    // terms, then fixed GARCH presets.
    std::vector<Eigen::VectorXd> starts;
    if (warm && warm->converged && warm->spec == spec) {
        starts.push_back(pack(spec, warm->mu, warm->phi.data(), warm->theta.data(),
                              warm->omega, warm->alpha, warm->beta));
    }
    if (spec.p + spec.q > 0) {
        Fit base;
        if (base00 && base00->converged) {
            base = *base00;
        } else {
            base = fit_impl(returns, Spec{0, 0}, nullptr, nullptr);
        }
        if (base.converged) {
            starts.push_back(
                pack(spec, base.mu, nullptr, nullptr, base.omega, base.alpha, base.beta));
        }
    }
    const double presets[3][2] = {{0.05, 0.90}, {0.10, 0.80}, {0.02, 0.55}};
    for (const auto& ab : presets) {
        const double a = ab[0], b = ab[1];
        starts.push_back(
            pack(spec, stats.mean, nullptr, nullptr, stats.var * (1.0 - a - b), a, b));
    }

    MinimizeOptions opts;
    opts.max_iterations = 300;

    MinimizeResult best;
    bool have_any = false;
    bool converged = false;
    for (const auto& x0 : starts) {
        const MinimizeResult mr = minimize_bfgs(objective, x0, opts);
        if (!std::isfinite(mr.fx)) continue;
        if (!have_any || mr.fx < best.fx) {
            best = mr;
            have_any = true;
        }
        if (mr.converged) {
            best = mr;
            converged = true;
            break;
        }
    }
    if (!have_any) return make_unconverged(spec, n);

    const NaturalParams np = unpack(best.x, spec);
    Fit out;
    out.spec = spec;
    out.mu = np.mu;
    out.phi.assign(np.phi, np.phi + spec.p);
    out.theta.assign(np.theta, np.theta + spec.q);
    out.omega = np.omega;
    out.alpha = np.alpha;
    out.beta = np.beta;
    out.loglik = -best.fx;
    out.ic = information_criteria(out.loglik, param_count(spec), n);
    out.converged = converged;
    out.n_obs = n;
    return out;
}

}  // namespace

Criterion criterion_from_string(const std::string& s) {
    if (s == "aic") return Criterion::aic;
    if (s == "bic") return Criterion::bic;
    if (s == "hqc") return Criterion::hqc;
    throw ConfigError("unknown criterion: '" + s + "'");
}

std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::aic: return "aic";
        case Criterion::bic: return "bic";
        case Criterion::hqc: return "hqc";
    }
    return "?";
}

double Criteria::get(Criterion c) const {
    switch (c) {
        case Criterion::aic: return aic;
        case Criterion::bic: return bic;
        case Criterion::hqc: return hqc;
    }
    return aic;
}

int param_count(const Spec& spec) { return spec.p + spec.q + 4; }

Criteria information_criteria(double loglik, int k, std::size_t n) {
    Criteria c;
    const double dk = static_cast<double>(k);
    const double dn = static_cast<double>(n);
    c.aic = 2.0 * dk - 2.0 * loglik;
    c.bic = dk * std::log(dn) - 2.0 * loglik;
    c.hqc = 2.0 * dk * std::log(std::log(dn)) - 2.0 * loglik;
    return c;
}

Fit fit(std::span<const double> returns, Spec spec, const Fit* warm_start) {
    return fit_impl(returns, spec, warm_start, nullptr);
}

double log_likelihood(std::span<const double> returns, const Fit& params) {
    const WindowStats stats = window_stats(returns);
    NaturalParams np;
    np.mu = params.mu;
    for (std::size_t i = 0; i < params.phi.size(); ++i) np.phi[i] = params.phi[i];
    for (std::size_t j = 0; j < params.theta.size(); ++j) np.theta[j] = params.theta[j];
    np.omega = params.omega;
    np.alpha = params.alpha;
    np.beta = params.beta;
    return -neg_loglik(returns, params.spec, np, stats.mean, stats.var);
}

Spec select_orders(std::span<const double> returns, Criterion criterion, int pmax,
                   int qmax, int jobs) {
    std::vector<Spec> grid;
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q) grid.push_back(Spec{p, q});

    const Fit base = fit_impl(returns, Spec{0, 0}, nullptr, nullptr);
    std::vector<Fit> fits(grid.size());

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (grid[i].p == 0 && grid[i].q == 0) {
                fits[i] = base;
            } else {
                fits[i] = fit_impl(returns, grid[i], nullptr, &base);
            }
        }
    };

    const int workers = std::max(1, jobs);
    if (workers == 1) {
        run_range(0, grid.size());
    } else {
        std::vector<std::future<void>> futures;
        const std::size_t chunk = (grid.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = std::min(grid.size(), w * chunk);
            const std::size_t hi = std::min(grid.size(), lo + chunk);
            if (lo < hi)
                futures.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& f : futures) f.get();
    }

    bool found = false;
    Spec best_spec;
    double best_value = kInf;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!fits[i].converged) continue;
        const double value = fits[i].ic.get(criterion);
        const Spec s = grid[i];
        const bool better =
            !found || value < best_value ||
            (value == best_value &&
             (s.p + s.q < best_spec.p + best_spec.q ||
              (s.p + s.q == best_spec.p + best_spec.q && s.p < best_spec.p)));
        if (better) {
            found = true;
            best_value = value;
            best_spec = s;
        }
    }
    if (!found) throw NoConvergedFit("no (p,q) fit converged on this window");
    return best_spec;
}

double forecast_one_step(const Fit& fit, std::span<const double> recent) {
    const int p = fit.spec.p;
    const int q = fit.spec.q;
    const std::size_t n = recent.size();
    if (n < static_cast<std::size_t>(std::max(p, q)))
        throw InsufficientHistory("need at least max(p,q) recent returns");
    if (p + q == 0) return fit.mu;

    const WindowStats stats = window_stats(recent);
    double eps_lag[kMaxOrder] = {};
    for (std::size_t t = 0; t < n; ++t) {
        double mean_t = fit.mu;
        for (int i = 1; i <= p; ++i)
            mean_t += fit.phi[i - 1] *
                      (t >= static_cast<std::size_t>(i) ? recent[t - i] : stats.mean);
        for (int j = 1; j <= q; ++j) mean_t += fit.theta[j - 1] * eps_lag[j - 1];
        const double eps = recent[t] - mean_t;
        for (int j = kMaxOrder - 1; j >= 1; --j) eps_lag[j] = eps_lag[j - 1];
        eps_lag[0] = eps;
    }
    // One step past the window: lags shift by one.
    double forecast = fit.mu;
    for (int i = 1; i <= p; ++i) forecast += fit.phi[i - 1] * recent[n - i];
    for (int j = 1; j <= q; ++j) forecast += fit.theta[j - 1] * eps_lag[j - 1];
    return forecast;
}

std::pair<SignalSeries, RollingForecastLog> rolling_signal(const ReturnSeries& returns,
                                                           const RollingConfig& cfg) {
    const std::size_t n = returns.size();
    const std::size_t s = cfg.first_train;
    if (s < 2 || n < s + 1)
        throw SeriesTooShort("need more than first_train observations");

    SignalSeries sig;
    sig.asset_id = returns.asset_id;
    RollingForecastLog log;

    Spec cur_spec{0, 0};
    Fit last_good;
    bool have_good = false;

    for (std::size_t t = s; t < n; ++t) {
        const std::size_t lo = cfg.expanding
                                   ? 0
                                   : (t > cfg.rolling_window ? t - cfg.rolling_window : 0);
        const std::span<const double> window(returns.log_returns.data() + lo, t - lo);
        const Timestamp decision_ts = returns.timestamps[t - 1];

        bool reselected = false;
        const bool quarter_start =
            t == s || quarter_key(returns.timestamps[t - 1]) !=
                          quarter_key(returns.timestamps[t - 2]);
        if (quarter_start) {
            try {
                cur_spec = select_orders(window, cfg.criterion, cfg.pmax, cfg.qmax, cfg.jobs);
                reselected = true;
            } catch (const NoConvergedFit&) {
                // keep the previous spec ("last available model")
            } catch (const DegenerateWindow&) {
            }
        }

        Fit refit;
        bool refit_threw = false;
        try {
            refit = fit_impl(window, cur_spec,
                             have_good && last_good.spec == cur_spec ? &last_good : nullptr,
                             nullptr);
        } catch (const Error&) {
            refit_threw = true;
        }

        RollingEntry e;
        e.timestamp = decision_ts;
        e.refit_converged = !refit_threw && refit.converged;
        int position = 0;
        const Fit* use = nullptr;
        if (e.refit_converged) {
            last_good = refit;
            have_good = true;
            use = &last_good;
        } else if (have_good) {
            use = &last_good;
            e.fallback = true;
        }
        if (use) {
            e.spec = use->spec;
            e.mu = use->mu;
            e.omega = use->omega;
            e.alpha = use->alpha;
            e.beta = use->beta;
            e.forecast = forecast_one_step(*use, window);
            position = e.forecast >= 0.0 ? +1 : -1;
        } else {
            e.spec = cur_spec;
            e.forecast = std::numeric_limits<double>::quiet_NaN();
            e.fallback = true;
            position = 0;
        }
        e.reselected = reselected;
        log.entries.push_back(e);

        sig.timestamps.push_back(decision_ts);
        sig.positions.push_back(position);
        sig.forecasts.push_back(e.forecast);
    }
    return {std::move(sig), std::move(log)};
}

std::string rolling_log_csv(const RollingForecastLog& log) {
    std::string out = "timestamp,p,q,mu,omega,alpha,beta,forecast,fallback\n";
    char buf[160];
    for (const RollingEntry& e : log.entries) {
        std::snprintf(buf, sizeof buf, ",%d,%d,%.10g,%.10g,%.10g,%.10g,%.10g,%d\n",
                      e.spec.p, e.spec.q, e.mu, e.omega, e.alpha, e.beta, e.forecast,
                      e.fallback ? 1 : 0);
        out += format_timestamp(e.timestamp);
        out += buf;
    }
    return out;
}

}  // namespace aisforge::garch
