#ifndef FGM_MLE_HPP
#define FGM_MLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "json.hpp"
#include "mldegree.hpp"
#include "model.hpp"
#include "roots.hpp"

namespace fgm {

struct FitResult {
    double theta_hat = 0.0;
    /// Constant-free log-likelihood at theta_hat.
    double loglik = 0.0;
    bool at_boundary = false;
    std::optional<double> interior_root;
    std::size_t n_effective = 0;
    std::size_t dropped = 0;
    /// Both endpoints gave the same likelihood; +1 was chosen.
    bool boundary_tie = false;
};

/// Maximum-likelihood estimate of theta over [-1, 1].
///
/// Degenerate weights (w = 0) are dropped. If every remaining c = 1/w is equal
/// under `policy` the likelihood is monotone and the estimate is sign(c).
/// Otherwise the interior zero of the score is used when the score changes
/// sign on (-1, 1); the log-likelihood is strictly concave there, so that zero
/// is the global maximiser. Failing both, the better endpoint wins.
inline FitResult fit(std::span<const double> weights, const EqualityPolicy& policy = {}) {
    std::vector<double> eff;
    eff.reserve(weights.size());
    for (double w : weights)
        if (w != 0.0) eff.push_back(w);

    FitResult r;
    r.n_effective = eff.size();
    r.dropped = weights.size() - eff.size();
    if (eff.empty()) throw NoDataError("no non-degenerate observations: the likelihood does not depend on theta");

    std::vector<double> c;
    c.reserve(eff.size());
    for (double w : eff) c.push_back(1.0 / w);
    const auto prof = profile(CShiftList<double>(std::move(c)), policy);
    if (prof.p == 1) {
        r.theta_hat = prof.groups.front().value > 0.0 ? 1.0 : -1.0;
        r.loglik = log_likelihood(eff, Theta(r.theta_hat));
        r.at_boundary = true;
        return r;
    }

    if (auto root = score_root_in_open_interval(eff)) {
        r.theta_hat = *root;
        r.interior_root = root;
        r.loglik = log_likelihood(eff, Theta(*root));
        return r;
    }

    bool pole_lo = false, pole_hi = false;
    for (double w : eff) {
        pole_lo |= (w == 1.0);
        pole_hi |= (w == -1.0);
    }
    constexpr double kEndpointOffset = 1e-12;
    const double l_lo = log_likelihood(eff, Theta(pole_lo ? -1.0 + kEndpointOffset : -1.0));
    const double l_hi = log_likelihood(eff, Theta(pole_hi ? 1.0 - kEndpointOffset : 1.0));
    r.at_boundary = true;
    r.boundary_tie = (l_lo == l_hi);
    r.theta_hat = l_lo > l_hi ? -1.0 : 1.0;
    r.loglik = log_likelihood(eff, Theta(r.theta_hat));
    return r;
}

inline FitResult fit(const Dataset& data, const EqualityPolicy& policy = {}) { return fit(data.weights(), policy); }

/// Pointwise constant-free log-likelihood; -infinity where undefined.
inline std::vector<std::pair<double, double>> profile_loglik(std::span<const double> weights,
                                                            std::span<const double> grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(grid.size());
    for (double t : grid) out.emplace_back(t, log_likelihood(weights, Theta(t)));
    return out;
}

inline std::vector<std::pair<double, double>> profile_loglik(const Dataset& data, std::span<const double> grid) {
    return profile_loglik(data.weights(), grid);
}

inline nlohmann::json to_json(const FitResult& r) {
    nlohmann::json j{{"theta_hat", r.theta_hat},
                     {"loglik", r.loglik},
                     {"at_boundary", r.at_boundary},
                     {"n_effective", r.n_effective},
                     {"dropped", r.dropped}};
    if (r.boundary_tie) j["boundary_tie"] = true;
    return j;
}

}  // namespace fgm

#endif  // FGM_MLE_HPP
