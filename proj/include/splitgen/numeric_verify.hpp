#pragma once

#include "splitgen/ladder.hpp"

#include <cstdint>
#include <vector>

namespace splitgen {

struct NumericVerifyOptions {
    int dim = 4;  // matrix dimension
    std::vector<double> x_ladder = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
};

/// Empirical order fit: for seeded random dense matrices, the Frobenius
/// error of the ladder against exp(x * sum of operators) is fitted on a
/// log-log scale over the x ladder; the mean slope over the trials is
/// returned. An order-m composition fits a slope near m+1. Per-trial seeds
/// derive deterministically from the master seed.
double verify_order_numeric(const NumericLadder& ladder, int m, int trials, std::uint64_t seed,
                            const NumericVerifyOptions& opts = {});

inline double verify_order_numeric(const Ladder& ladder, int m, int trials, std::uint64_t seed,
                                   const NumericVerifyOptions& opts = {}) {
    return verify_order_numeric(to_numeric(ladder), m, trials, seed, opts);
}

}  // namespace splitgen
