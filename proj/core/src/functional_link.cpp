#include "prvfln/functional_link.hpp"

#include "prvfln/errors.hpp"

namespace prvfln {

Eigen::VectorXd expand(const Eigen::VectorXd& x) {
    const Eigen::Index n = x.size();
    if (n < 1) {
        throw DimensionError("expand: empty input vector");
    }
    Eigen::VectorXd xe(extended_size(n));
    xe[0] = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double v = x[j];
        xe[2 * j + 1] = v;
        xe[2 * j + 2] = 2.0 * v * v - 1.0;
    }
    return xe;
}

}  // namespace prvfln
