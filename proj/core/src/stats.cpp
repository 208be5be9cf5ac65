#include "prvfln/stats.hpp"

#include <algorithm>
#include <cmath>

#include "prvfln/errors.hpp"

namespace prvfln {

double pearson(double var_a, double var_b, double cov) {
    if (var_a < kDegenerateVariance || var_b < kDegenerateVariance) {
        return 0.0;
    }
    const double rho = cov / std::sqrt(var_a * var_b);
    return std::clamp(rho, -1.0, 1.0);
}

double mci(double var_a, double var_b, double rho) {
    const double sum = var_a + var_b;
    const double radicand =
        std::max(0.0, sum * sum - 4.0 * var_a * var_b * (1.0 - rho * rho));
    return 0.5 * (sum - std::sqrt(radicand));
}

void WelfordAccumulator::add(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DataError("WelfordAccumulator: non-finite input pair");
    }
    ++count_;
    const double n = static_cast<double>(count_);
    const double da = a - mean_a_;
    const double db = b - mean_b_;
    mean_a_ += da / n;
    mean_b_ += db / n;
    m2_a_ += da * (a - mean_a_);
    m2_b_ += db * (b - mean_b_);
    co_moment_ += da * (b - mean_b_);
}

WelfordAccumulator WelfordAccumulator::from_raw(std::uint64_t count, double mean_a,
                                                double mean_b, double m2_a, double m2_b,
                                                double co_moment) {
    WelfordAccumulator acc;
    acc.count_ = count;
    acc.mean_a_ = mean_a;
    acc.mean_b_ = mean_b;
    acc.m2_a_ = m2_a;
    acc.m2_b_ = m2_b;
    acc.co_moment_ = co_moment;
    return acc;
}

void RunningStat::add(double x) {
    if (!std::isfinite(x)) {
        throw DataError("RunningStat: non-finite input");
    }
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

double RunningStat::std_dev() const {
    return std::sqrt(std::max(0.0, variance()));
}

RunningStat RunningStat::from_raw(std::uint64_t count, double mean, double m2) {
    RunningStat s;
    s.count_ = count;
    s.mean_ = mean;
    s.m2_ = m2;
    return s;
}

double mci_pairwise(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() != v.size()) {
        throw DimensionError("mci_pairwise: length mismatch");
    }
    if (u.size() < 2) {
        throw DimensionError("mci_pairwise: need at least 2 components");
    }
    WelfordAccumulator acc;
    for (Eigen::Index j = 0; j < u.size(); ++j) {
        acc.add(u[j], v[j]);
    }
    return acc.mci();
}

}  // namespace prvfln
