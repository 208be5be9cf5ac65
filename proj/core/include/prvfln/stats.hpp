#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace prvfln {

// Variance below this is treated as degenerate: correlation of a constant
// signal is reported as 0 instead of NaN.
inline constexpr double kDegenerateVariance = 1e-12;

// Pearson correlation from precomputed population moments. Returns 0 when
// either variance is degenerate; result is clamped to [-1, 1].
double pearson(double var_a, double var_b, double cov);

// Maximal information compression index: the smallest eigenvalue of the 2x2
// covariance matrix [[va, c], [c, vb]] expressed through (va, vb, rho).
// 0 means perfect linear dependence. The radicand is clamped at zero so
// rounding can never produce a negative root.
double mci(double var_a, double var_b, double rho);

// Single-pass accumulator for the joint moments of a scalar pair (a, b):
// running means, sums of squared deviations and the cross-deviation sum.
// Population convention (divide by n) throughout.
class WelfordAccumulator {
public:
    // Throws DataError if either input is non-finite.
    void add(double a, double b);

    std::uint64_t count() const { return count_; }
    double mean_a() const { return mean_a_; }
    double mean_b() const { return mean_b_; }
    double m2_a() const { return m2_a_; }
    double m2_b() const { return m2_b_; }
    double co_moment() const { return co_moment_; }

    double var_a() const { return count_ ? m2_a_ / static_cast<double>(count_) : 0.0; }
    double var_b() const { return count_ ? m2_b_ / static_cast<double>(count_) : 0.0; }
    double covariance() const { return count_ ? co_moment_ / static_cast<double>(count_) : 0.0; }
    double correlation() const { return pearson(var_a(), var_b(), covariance()); }

    // MCI of everything seen so far.
    double mci() const { return prvfln::mci(var_a(), var_b(), correlation()); }

    // Snapshot plumbing: rebuild from raw moments.
    static WelfordAccumulator from_raw(std::uint64_t count, double mean_a, double mean_b,
                                       double m2_a, double m2_b, double co_moment);

    bool operator==(const WelfordAccumulator&) const = default;

private:
    std::uint64_t count_ = 0;
    double mean_a_ = 0.0;
    double mean_b_ = 0.0;
    double m2_a_ = 0.0;
    double m2_b_ = 0.0;
    double co_moment_ = 0.0;
};

// Scalar running mean / variance (population convention), used for relevance
// lifespans, error trends, target spread and online standardization.
class RunningStat {
public:
    void add(double x);

    std::uint64_t count() const { return count_; }
    double mean() const { return count_ ? mean_ : 0.0; }
    double variance() const { return count_ ? m2_ / static_cast<double>(count_) : 0.0; }
    double std_dev() const;

    static RunningStat from_raw(std::uint64_t count, double mean, double m2);
    double m2() const { return m2_; }

    bool operator==(const RunningStat&) const = default;

private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

// MCI between two equal-length vectors, treating their components as paired
// observations. Throws DimensionError when fewer than 2 components are given
// (callers fall back to squared distance for 1-D inputs).
double mci_pairwise(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

}  // namespace prvfln
