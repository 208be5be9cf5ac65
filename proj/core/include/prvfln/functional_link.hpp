#pragma once

#include <Eigen/Core>

namespace prvfln {

// The enhancement layer is a second-order Chebyshev expansion. The order is
// a layout contract (feature j owns two slots), not a tuning knob.
inline constexpr int kChebyshevOrder = 2;

// Length of the extended input vector for n raw features.
inline constexpr Eigen::Index extended_size(Eigen::Index n) { return 2 * n + 1; }

// Expands x into [1, x_1, 2*x_1^2-1, x_2, 2*x_2^2-1, ...]. The leading 1 is
// the output-node intercept. Throws DimensionError on an empty input.
Eigen::VectorXd expand(const Eigen::VectorXd& x);

}  // namespace prvfln
