#include "aisforge/synthetic.hpp"

#include <cmath>

#include "aisforge/errors.hpp"
#include "aisforge/rng.hpp"

namespace aisforge::synth {

GeneratorKind kind_from_string(const std::string& s) {
    if (s == "gaussian_iid") return GeneratorKind::gaussian_iid;
    if (s == "ar1") return GeneratorKind::ar1;
    if (s == "arma_garch") return GeneratorKind::arma_garch;
    if (s == "sign_persistent") return GeneratorKind::sign_persistent;
    if (s == "regime_switch") return GeneratorKind::regime_switch;
    throw InvalidParameters("unknown generator kind: '" + s + "'");
}

std::string to_string(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::gaussian_iid: return "gaussian_iid";
        case GeneratorKind::ar1: return "ar1";
        case GeneratorKind::arma_garch: return "arma_garch";
        case GeneratorKind::sign_persistent: return "sign_persistent";
        case GeneratorKind::regime_switch: return "regime_switch";
    }
    return "?";
}

std::vector<Timestamp> make_calendar(Timestamp start, std::size_t n, Frequency f) {
    std::vector<Timestamp> out;
    out.reserve(n);
    if (f == Frequency::daily) {
        Timestamp t = start;
        while (out.size() < n) {
            if (weekday(t) < 5) out.push_back(t);
            t += 86400;
        }
    } else {
        Timestamp day = start - (start % 86400);
        int hour = 9;
        while (out.size() < n) {
            if (weekday(day) < 5) {
                out.push_back(day + hour * 3600);
                if (++hour > 15) {
                    hour = 9;
                    day += 86400;
                }
            } else {
                day += 86400;
            }
        }
    }
    return out;
}

namespace {

Timestamp previous_slot(Timestamp first, Frequency f) {
    if (f == Frequency::daily) {
        Timestamp t = first - 86400;
        while (weekday(t) >= 5) t -= 86400;
        return t;
    }
    const std::int64_t sod = first % 86400;
    if (sod > 9 * 3600) return first - 3600;
    Timestamp day = first - sod - 86400;
    while (weekday(day) >= 5) day -= 86400;
    return day + 15 * 3600;
}

void validate(const GeneratorSpec& s) {
    if (s.length == 0) throw InvalidParameters("length must be positive");
    if (!(s.sigma >= 0)) throw InvalidParameters("sigma must be >= 0");
    switch (s.kind) {
        case GeneratorKind::ar1:
            if (std::abs(s.phi) >= 1.0) throw InvalidParameters("|phi| must be < 1");
            break;
        case GeneratorKind::arma_garch:
            if (!(s.omega > 0)) throw InvalidParameters("omega must be > 0");
            if (s.alpha < 0 || s.beta < 0 || s.alpha + s.beta >= 1.0)
                throw InvalidParameters("need alpha, beta >= 0 and alpha + beta < 1");
            if (std::abs(s.ar) >= 1.0) throw InvalidParameters("|ar| must be < 1");
            break;
        case GeneratorKind::sign_persistent:
            if (s.flip_prob < 0 || s.flip_prob > 1)
                throw InvalidParameters("flip_prob must be in [0, 1]");
            break;
        case GeneratorKind::regime_switch:
            if (s.switch_prob < 0 || s.switch_prob > 1)
                throw InvalidParameters("switch_prob must be in [0, 1]");
            break;
        default:
            break;
    }
}

}  // namespace

SyntheticSeries generate(const GeneratorSpec& spec) {
    validate(spec);
    Rng rng(spec.seed);

    SyntheticSeries out;
    const std::size_t n = spec.length;
    std::vector<double>& lr = out.returns.log_returns;
    lr.reserve(n);
    out.true_variance.reserve(n);
    out.true_cond_mean.reserve(n);

    switch (spec.kind) {
        case GeneratorKind::gaussian_iid: {
            for (std::size_t t = 0; t < n; ++t) {
                lr.push_back(spec.mean + spec.sigma * rng.normal());
                out.true_cond_mean.push_back(spec.mean);
                out.true_variance.push_back(spec.sigma * spec.sigma);
            }
            break;
        }
        case GeneratorKind::ar1: {
            double prev = 0.0;
            for (std::size_t t = 0; t < n + spec.burn_in; ++t) {
                const double cond_mean = spec.mean + spec.phi * prev;
                const double r = cond_mean + spec.sigma * rng.normal();
                if (t >= spec.burn_in) {
                    lr.push_back(r);
                    out.true_cond_mean.push_back(cond_mean);
                    out.true_variance.push_back(spec.sigma * spec.sigma);
                }
                prev = r;
            }
            break;
        }
        case GeneratorKind::arma_garch: {
            double h = spec.omega / (1.0 - spec.alpha - spec.beta);
            double eps_prev = 0.0;
            double r_prev = spec.mu;
            for (std::size_t t = 0; t < n + spec.burn_in; ++t) {
                if (t > 0)
                    h = spec.omega + spec.alpha * eps_prev * eps_prev + spec.beta * h;
                const double cond_mean = spec.mu + spec.ar * r_prev + spec.ma * eps_prev;
                const double eps = std::sqrt(h) * rng.normal();
                const double r = cond_mean + eps;
                if (t >= spec.burn_in) {
                    lr.push_back(r);
                    out.true_cond_mean.push_back(cond_mean);
                    out.true_variance.push_back(h);
                }
                eps_prev = eps;
                r_prev = r;
            }
            break;
        }
        case GeneratorKind::sign_persistent: {
            constexpr double kMeanAbsNormal = 0.7978845608028654;  // sqrt(2/pi)
            int state = rng.uniform() < 0.5 ? -1 : +1;
            for (std::size_t t = 0; t < n; ++t) {
                if (t > 0 && rng.uniform() < spec.flip_prob) state = -state;
                const double magnitude = spec.sigma * std::abs(rng.normal());
                lr.push_back(state * magnitude);
                out.true_cond_mean.push_back(state * spec.sigma * kMeanAbsNormal);
                out.true_variance.push_back(spec.sigma * spec.sigma);
                out.true_state.push_back(state);
            }
            break;
        }
        case GeneratorKind::regime_switch: {
            int state = 0;
            for (std::size_t t = 0; t < n; ++t) {
                if (t > 0 && rng.uniform() < spec.switch_prob) state = 1 - state;
                const double m = state == 0 ? spec.mean : spec.regime_mean2;
                const double s = state == 0 ? spec.sigma : spec.regime_sigma2;
                lr.push_back(m + s * rng.normal());
                out.true_cond_mean.push_back(m);
                out.true_variance.push_back(s * s);
                out.true_state.push_back(state);
            }
            break;
        }
    }

    out.returns.asset_id = spec.asset_id;
    out.returns.frequency = spec.frequency;
    const Timestamp start =
        spec.start != 0 ? spec.start : make_timestamp(2010, 1, 4);
    out.returns.timestamps = make_calendar(start, n, spec.frequency);
    out.returns.simple_returns.reserve(n);
    for (double r : lr) out.returns.simple_returns.push_back(std::expm1(r));
    return out;
}

PriceSeries prices_from_returns(const ReturnSeries& returns, double initial) {
    if (returns.size() == 0) throw EmptySeries("no returns to compound");
    PriceSeries p;
    p.asset_id = returns.asset_id;
    p.frequency = returns.frequency;
    p.timestamps.reserve(returns.size() + 1);
    p.prices.reserve(returns.size() + 1);
    p.timestamps.push_back(previous_slot(returns.timestamps.front(), returns.frequency));
    p.prices.push_back(initial);
    double value = initial;
    for (std::size_t i = 0; i < returns.size(); ++i) {
        value *= std::exp(returns.log_returns[i]);
        p.timestamps.push_back(returns.timestamps[i]);
        p.prices.push_back(value);
    }
    return p;
}

}  // namespace aisforge::synth
