#pragma once

#include <cstddef>
#include <vector>

namespace aisforge {

// Index ranges over a ReturnSeries, [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t length() const { return end - begin; }
};

// One walk-forward segment: validation is the chronological tail of the
// training range; the test range follows the training range immediately.
struct Segment {
    IndexRange train;
    IndexRange validation;
    IndexRange test;
};

// Expanding-window plan: segment k trains on [0, first_train + k*test_len)
// and tests on the next test_len observations (final segment may be partial).
struct WalkForwardPlan {
    std::vector<Segment> segments;
    std::size_t first_train = 252;
    std::size_t test_len = 252;
    double val_frac = 0.33;
};

WalkForwardPlan build_plan(std::size_t n_obs, std::size_t first_train = 252,
                           std::size_t test_len = 252, double val_frac = 0.33);

}  // namespace aisforge
