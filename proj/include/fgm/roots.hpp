#ifndef FGM_ROOTS_HPP
#define FGM_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "json.hpp"
#include "model.hpp"
#include "polynomial.hpp"

namespace fgm {

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
    /// |p(z)| / sum |a_i| |z|^i at the reported value.
    double residual = 0.0;
};

struct RootSet {
    std::vector<Root> roots;
    bool converged = false;
    int sweeps = 0;

    int total_multiplicity() const {
        return std::accumulate(roots.begin(), roots.end(), 0, [](int acc, const Root& r) { return acc + r.multiplicity; });
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& r : roots) m = std::max(m, r.residual);
        return m;
    }
};

struct RootOptions {
    int max_sweeps = 200;
    /// Roots closer than cluster_radius * max(1, max |root|) are merged.
    double cluster_radius = 1e-7;
    /// Radius of the starting circle; defaults to 1 + max |a_i / a_n|.
    std::optional<double> initial_radius;
};

/// sum |a_i| r^i
inline double coefficient_magnitude(const RealPoly& p, double r) {
    double mag = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) mag = mag * r + std::abs(*it);
    return mag;
}

/// Relative backward error of p at z.
inline double backward_error(const RealPoly& p, std::complex<double> z) {
    const double mag = coefficient_magnitude(p, std::abs(z));
    const double val = std::abs(eval(p, z));
    return mag == 0.0 ? val : val / mag;
}

namespace detail {

/// Double-double value hi + lo, |lo| <= ulp(hi) / 2.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DoubleDouble quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble operator+(DoubleDouble x, DoubleDouble y) {
    const auto s = two_sum(x.hi, y.hi);
    return quick_two_sum(s.hi, s.lo + x.lo + y.lo);
}

inline DoubleDouble operator-(DoubleDouble x) { return {-x.hi, -x.lo}; }

inline DoubleDouble operator*(DoubleDouble x, double b) {
    const double p = x.hi * b;
    const double e = std::fma(x.hi, b, -p);
    return quick_two_sum(p, e + x.lo * b);
}

struct ComplexDD {
    DoubleDouble re, im;
};

/// x * z + a with x carried in double-double.
inline ComplexDD mul_add(const ComplexDD& x, std::complex<double> z, const ComplexDD& a) {
    return {x.re * z.real() + -(x.im * z.imag()) + a.re, x.re * z.imag() + x.im * z.real() + a.im};
}

struct HornerPair {
    std::complex<double> value;
    std::complex<double> slope;
};

/// p(z) and p'(z) by Horner in double-double, rounded once at the end.
/// Near clustered roots plain double evaluation is dominated by rounding noise
/// of order eps * sum |a_i| |z|^i.
inline HornerPair horner_with_derivative(const RealPoly& p, std::complex<double> z) {
    ComplexDD v{}, d{};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        d = mul_add(d, z, v);
        v = mul_add(v, z, ComplexDD{{*it, 0.0}, {}});
    }
    return {{v.re.hi + v.re.lo, v.im.hi + v.im.lo}, {d.re.hi + d.re.lo, d.im.hi + d.im.lo}};
}

/// Groups root estimates into a partition by transitive closeness.
inline std::vector<Root> cluster_roots(const RealPoly& p, const std::vector<std::complex<double>>& z, double radius) {
    const std::size_t n = z.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= radius) parent[find(i)] = find(j);

    std::vector<Root> out;
    std::vector<std::size_t> slot(n, n);
    std::vector<std::complex<double>> sums;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.push_back({0.0, 0, 0.0});
            sums.emplace_back(0.0);
        }
        out[slot[r]].multiplicity += 1;
        sums[slot[r]] += z[i];
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].value = sums[k] / static_cast<double>(out[k].multiplicity);
        out[k].residual = backward_error(p, out[k].value);
    }
    return out;
}

}  // namespace detail

/// All complex zeros of p by Aberth-Ehrlich simultaneous iteration.
/// Nearby estimates are merged into one root with summed multiplicity.
inline RootSet complex_roots(const RealPoly& p, const RootOptions& opts = {}) {
    if (p.degree() < 1) throw DomainError("complex_roots needs a polynomial of degree >= 1");
    const int n = p.degree();
    const auto& a = p.coeffs();
    RootSet result;

    if (n == 1) {
        const std::complex<double> z = -a[0] / a[1];
        result.roots.push_back({z, 1, backward_error(p, z)});
        result.converged = true;
        return result;
    }

    double radius = 0.0;
    if (opts.initial_radius) {
        radius = *opts.initial_radius;
    } else {
        for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i] / a[n]));
        radius += 1.0;
    }

    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
        z[k] = std::polar(radius, angle);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    // Rounding bound of the double-double Horner pass.
    const double noise_floor = 4.0 * (n + 1) * eps * eps;
    std::vector<bool> done(n, false);
    int sweep = 0;
    for (; sweep < opts.max_sweeps; ++sweep) {
        bool all_done = true;
        for (int k = 0; k < n; ++k) {
            if (done[k]) continue;
            const auto [val, slope] = detail::horner_with_derivative(p, z[k]);
            if (std::abs(val) <= noise_floor * coefficient_magnitude(p, std::abs(z[k]))) {
                done[k] = true;
                continue;
            }
            all_done = false;
            const std::complex<double> newton = val / slope;
            std::complex<double> repulsion = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const std::complex<double> step = newton / (1.0 - newton * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                // Coincident estimates: nothing left to resolve in double.
                done[k] = true;
                continue;
            }
            z[k] -= step;
            if (std::abs(step) <= 2.0 * eps * std::abs(z[k])) done[k] = true;
        }
        if (all_done) break;
    }
    result.sweeps = sweep;
    result.converged = std::all_of(done.begin(), done.end(), [](bool d) { return d; });

    double scale = 1.0;
    for (const auto& zk : z) scale = std::max(scale, std::abs(zk));
    result.roots = detail::cluster_roots(p, z, opts.cluster_radius * scale);
    return result;
}

/// The sign-changing zero of the score on (-1, 1), if any. The score is
/// strictly decreasing between its poles, so the bracket never loses the root.
inline std::optional<double> score_root_in_open_interval(std::span<const double> weights) {
    bool any_nonzero = false, pole_lo = false, pole_hi = false;
    for (double w : weights) {
        any_nonzero |= (w != 0.0);
        pole_lo |= (w == 1.0);
        pole_hi |= (w == -1.0);
    }
    if (!any_nonzero) throw DomainError("score root needs at least one nonzero weight");

    constexpr double kEndpointOffset = 1e-12;
    double lo = pole_lo ? -1.0 + kEndpointOffset : -1.0;
    double hi = pole_hi ? 1.0 - kEndpointOffset : 1.0;
    const double s_lo = score(weights, Theta(lo));
    const double s_hi = score(weights, Theta(hi));
    if (!(s_lo > 0.0 && s_hi < 0.0)) return std::nullopt;

    double x = 0.5 * (lo + hi);
    double dx_old = hi - lo;
    double dx = dx_old;
    double s = score(weights, Theta(x));
    double ds = score_derivative(weights, x);
    for (int iter = 0; iter < 400; ++iter) {
        if (std::abs(s) <= 1e-12) return x;
        if (s > 0.0)
            lo = x;
        else
            hi = x;
        if (hi - lo <= 1e-14) return x;

        const bool newton_leaves = ((x - hi) * ds - s) * ((x - lo) * ds - s) > 0.0;
        const bool newton_slow = std::abs(2.0 * s) > std::abs(dx_old * ds);
        dx_old = dx;
        if (newton_leaves || newton_slow) {
            const double mid = 0.5 * (lo + hi);
            dx = x - mid;
            x = mid;
        } else {
            dx = s / ds;
            x -= dx;
        }
        s = score(weights, Theta(x));
        ds = score_derivative(weights, x);
    }
    return x;
}

inline std::optional<double> score_root_in_open_interval(const Dataset& data) {
    return score_root_in_open_interval(data.weights());
}

inline nlohmann::json to_json(const RootSet& rs) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : rs.roots)
        roots.push_back({{"re", r.value.real()}, {"im", r.value.imag()}, {"mult", r.multiplicity}});
    return {{"roots", std::move(roots)}, {"converged", rs.converged}};
}

}  // namespace fgm

#endif  // FGM_ROOTS_HPP
