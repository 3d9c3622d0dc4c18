#include "aisforge/signals.hpp"

namespace aisforge {

namespace {

SignalSeries from_rule(const ReturnSeries& returns, bool buy_on_negative) {
    SignalSeries sig;
    sig.asset_id = returns.asset_id;
    sig.timestamps = returns.timestamps;
    sig.positions.reserve(returns.size());
    sig.forecasts.reserve(returns.size());
    for (std::size_t i = 0; i < returns.size(); ++i) {
        const double r = returns.log_returns[i];
        const bool negative = r < 0.0;
        sig.positions.push_back(negative == buy_on_negative ? +1 : -1);
        // The implied forecast is a sign view of -r (contrarian) or r (momentum).
        sig.forecasts.push_back(buy_on_negative ? -r : r);
    }
    return sig;
}

}  // namespace

SignalSeries contrarian_signal(const ReturnSeries& returns) {
    return from_rule(returns, /*buy_on_negative=*/true);
}

SignalSeries momentum_signal(const ReturnSeries& returns) {
    return from_rule(returns, /*buy_on_negative=*/false);
}

}  // namespace aisforge
