#ifndef FGM_MODEL_HPP
#define FGM_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fgm {

/// One bivariate data point in the closed first quadrant.
class Observation {
   public:
    Observation(double x, double y) : x_(x), y_(y) {
        if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("observation coordinates must be finite");
        if (x < 0.0 || y < 0.0) throw DomainError("observation coordinates must be nonnegative");
    }
    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    friend bool operator==(const Observation&, const Observation&) = default;

   private:
    double x_;
    double y_;
};

/// Association parameter, constrained to [-1, 1].
class Theta {
   public:
    explicit Theta(double value) : value_(value) {
        if (!(value >= -1.0 && value <= 1.0)) throw DomainError("theta must lie in [-1, 1]");
    }
    double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; }

   private:
    double value_;
};

/// 2 e^{-v} - 1, written as -2 e^{-v} expm1(v - ln 2) so that v = ln 2 gives exactly 0.
inline double marginal_factor(double v) {
    if (v == 0.0) return 1.0;
    const double f = -2.0 * std::exp(-v) * std::expm1(v - std::numbers::ln2);
    return std::clamp(f, -1.0, 1.0);
}

/// w = (2e^{-x}-1)(2e^{-y}-1), the coefficient of theta in the density bracket.
inline double weight(const Observation& obs) {
    return marginal_factor(obs.x()) * marginal_factor(obs.y());
}

/// Ordered sample with its derived weights. Weights are computed once from the
/// observations and cannot be mutated independently.
class Dataset {
   public:
    Dataset() = default;
    explicit Dataset(std::vector<Observation> observations) : observations_(std::move(observations)) {
        weights_.reserve(observations_.size());
        for (std::size_t i = 0; i < observations_.size(); ++i) {
            const double w = weight(observations_[i]);
            weights_.push_back(w);
            if (w == 0.0) degenerate_.push_back(i);
            sum_xy_ += observations_[i].x() + observations_[i].y();
        }
    }

    std::size_t n() const noexcept { return observations_.size(); }
    const std::vector<Observation>& observations() const noexcept { return observations_; }
    std::span<const double> weights() const noexcept { return weights_; }
    const std::vector<std::size_t>& degenerate_indices() const noexcept { return degenerate_; }
    std::size_t n_effective() const noexcept { return weights_.size() - degenerate_.size(); }
    /// sum of x_i + y_i, the additive constant of the full log-likelihood (negated).
    double sum_xy() const noexcept { return sum_xy_; }

    /// Weights of the non-degenerate observations, order preserved.
    std::vector<double> effective_weights() const {
        std::vector<double> out;
        out.reserve(n_effective());
        for (double w : weights_)
            if (w != 0.0) out.push_back(w);
        return out;
    }

   private:
    std::vector<Observation> observations_;
    std::vector<double> weights_;
    std::vector<std::size_t> degenerate_;
    double sum_xy_ = 0.0;
};

/// e^{-(x+y)} [1 + theta (2e^{-x}-1)(2e^{-y}-1)]
inline double density(const Observation& obs, Theta theta) {
    const double bracket = 1.0 + theta.value() * weight(obs);
    return std::exp(-(obs.x() + obs.y())) * std::max(bracket, 0.0);
}

enum class LoglikForm { constant_free, full };

/// sum_i log(1 + theta w_i); -infinity when some term is nonpositive.
inline double log_likelihood(std::span<const double> weights, Theta theta) {
    double acc = 0.0;
    for (double w : weights) {
        const double tw = theta.value() * w;
        if (1.0 + tw <= 0.0) return -std::numeric_limits<double>::infinity();
        acc += std::log1p(tw);
    }
    return acc;
}

inline double log_likelihood(const Dataset& data, Theta theta, LoglikForm form = LoglikForm::constant_free) {
    const double l = log_likelihood(data.weights(), theta);
    return form == LoglikForm::full ? l - data.sum_xy() : l;
}

/// sum_i w_i / (1 + theta w_i). Degenerate terms contribute exactly 0.
inline double score(std::span<const double> weights, Theta theta) {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i];
        if (w == 0.0) continue;
        const double denom = 1.0 + theta.value() * w;
        if (denom == 0.0)
            throw PoleError(i, "score has a pole at theta = " + std::to_string(theta.value()) + " (observation " +
                                   std::to_string(i) + ")");
        acc += w / denom;
    }
    return acc;
}

inline double score(const Dataset& data, Theta theta) { return score(data.weights(), theta); }

/// d score / d theta = -sum_i w_i^2 / (1 + theta w_i)^2; no pole check.
inline double score_derivative(std::span<const double> weights, double theta) {
    double acc = 0.0;
    for (double w : weights) {
        const double r = w / (1.0 + theta * w);
        acc -= r * r;
    }
    return acc;
}

struct CShift {
    std::vector<double> values;                ///< c_i = 1 / w_i, order preserved
    std::vector<std::size_t> degenerate;       ///< indices with w_i == 0, excluded above
};

inline CShift c_shift(std::span<const double> weights) {
    CShift out;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0.0)
            out.degenerate.push_back(i);
        else
            out.values.push_back(1.0 / weights[i]);
    }
    return out;
}

inline CShift c_shift(const Dataset& data) { return c_shift(data.weights()); }

namespace detail {

/// Uniform draw on the open interval (0, 1) from the top 53 bits.
inline double open_uniform(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

/// Inverts the conditional CDF of v given u for the FGM copula.
inline double conditional_inverse(double u, double t, double theta) {
    const double a = theta * (1.0 - 2.0 * u);
    if (std::abs(a) < 1e-12) return t;
    const double b = 1.0 + a;
    return (b - std::sqrt(b * b - 4.0 * a * t)) / (2.0 * a);
}

/// Draws n pairs by conditional inversion. Output depends only on (n, theta, seed).
inline Dataset sample(std::size_t n, Theta theta, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample size must be positive");
    std::mt19937_64 gen(seed);
    std::vector<Observation> obs;
    obs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = detail::open_uniform(gen);
        const double t = detail::open_uniform(gen);
        const double v = std::clamp(conditional_inverse(u, t, theta.value()), 0.0, std::nextafter(1.0, 0.0));
        obs.emplace_back(-std::log1p(-u), -std::log1p(-v));
    }
    return Dataset(std::move(obs));
}

}  // namespace fgm

#endif  // FGM_MODEL_HPP
