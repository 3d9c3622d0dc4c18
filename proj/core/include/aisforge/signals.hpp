#pragma once

#include "aisforge/series.hpp"

namespace aisforge {

// Mean-reversion rule: position at t is +1 when r_t < 0, otherwise -1.
// The position applies to the next period's return; always in the market.
SignalSeries contrarian_signal(const ReturnSeries& returns);

// Persistence rule: position at t is +1 when r_t >= 0, otherwise -1.
// Element-wise negation of the contrarian signal on every input.
SignalSeries momentum_signal(const ReturnSeries& returns);

}  // namespace aisforge
