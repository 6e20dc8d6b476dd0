#ifndef FGM_MLDEGREE_HPP
#define FGM_MLDEGREE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "json.hpp"
#include "model.hpp"
#include "polynomial.hpp"

namespace fgm {

/// How two c-values are declared equal. Exact scalars ignore the tolerance.
struct EqualityPolicy {
    double relative_tolerance = 1e-9;
};

template <Scalar S>
struct Group {
    S value;
    int multiplicity;
};

/// Counts behind the ML-degree formula: p distinct values, l of them repeated,
/// m the total size of the repeated groups.
template <Scalar S>
struct MultiplicityProfile {
    int n = 0;
    std::vector<Group<S>> groups;  // sorted by value
    int p = 0;
    int l = 0;
    int m = 0;

    bool all_equal() const noexcept { return p == 1 && n >= 2; }
};

template <Scalar S>
MultiplicityProfile<S> profile(const CShiftList<S>& c, const EqualityPolicy& policy = {}) {
    std::vector<S> sorted = c.values();
    std::sort(sorted.begin(), sorted.end());

    auto same = [&policy](const S& a, const S& b) {
        if constexpr (is_exact_v<S>)
            return a == b;
        else
            return std::abs(a - b) <= policy.relative_tolerance * std::max({1.0, std::abs(a), std::abs(b)});
    };

    // Single-linkage on sorted values: consecutive runs of close neighbours form
    // the transitive closure of the pairwise relation.
    MultiplicityProfile<S> prof;
    prof.n = static_cast<int>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && same(sorted[i - 1], sorted[i]))
            ++prof.groups.back().multiplicity;
        else
            prof.groups.push_back({sorted[i], 1});
    }
    prof.p = static_cast<int>(prof.groups.size());
    for (const auto& g : prof.groups) {
        if (g.multiplicity > 1) {
            ++prof.l;
            prof.m += g.multiplicity;
        }
    }
    return prof;
}

template <Scalar S>
struct CommonZero {
    S value;           ///< -c for a repeated c
    int multiplicity;  ///< multiplicity of value as a zero of h
};

/// Common zeros of h and k: one per repeated c-value, of multiplicity n_i - 1 in h.
template <Scalar S>
std::vector<CommonZero<S>> common_zeros(const MultiplicityProfile<S>& prof) {
    std::vector<CommonZero<S>> out;
    for (const auto& g : prof.groups)
        if (g.multiplicity >= 2) out.push_back({S(-g.value), g.multiplicity - 1});
    return out;
}

namespace detail {

template <Scalar S>
[[noreturn]] void throw_all_equal(const S& value) {
    const int sign = value > S(0) ? 1 : -1;
    throw AllEqualError(sign,
                        "all c-values are equal; the score has no zeros and the MLE is the boundary point theta = " +
                            std::to_string(sign));
}

}  // namespace detail

/// n + l - m - 1. The all-equal profile raises AllEqualError.
template <Scalar S>
int ml_degree_formula(const MultiplicityProfile<S>& prof) {
    if (prof.all_equal()) detail::throw_all_equal(prof.groups.front().value);
    return prof.n + prof.l - prof.m - 1;
}

/// deg h - deg gcd(h, k), computed over the rationals.
inline int ml_degree_algebraic(const CShiftList<Rational>& c) {
    const auto& v = c.values();
    if (v.size() >= 2 && std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v.front(); }))
        detail::throw_all_equal(v.front());
    const RationalPoly k = build_k(c);
    const RationalPoly h = derivative(k);
    if (h.is_constant()) return 0;
    return h.degree() - gcd(h, k).degree();
}

/// Multiplicity of -value as a zero of h, by repeated exact division.
inline int exact_zero_multiplicity(const CShiftList<Rational>& c, const Rational& value) {
    return root_multiplicity(build_h(c), Rational(-value));
}

/// Everything the CLI reports for one c-list.
struct MlDegreeReport {
    bool exact = true;
    int n = 0;
    int p = 0;
    int l = 0;
    int m = 0;
    std::optional<int> ml_degree;  // empty for the all-equal case
    nlohmann::json common_zeros = nlohmann::json::array();
    std::optional<int> boundary_mle;      // all-equal case only
    std::optional<int> algebraic_degree;  // exact mode only
    std::size_t dropped = 0;              // degenerate observations, dataset mode only
};

template <Scalar S>
MlDegreeReport make_report(const CShiftList<S>& c, const EqualityPolicy& policy = {}) {
    const auto prof = profile(c, policy);
    MlDegreeReport r;
    r.exact = is_exact_v<S>;
    r.n = prof.n;
    r.p = prof.p;
    r.l = prof.l;
    r.m = prof.m;
    for (const auto& z : common_zeros(prof)) {
        if constexpr (is_exact_v<S>)
            r.common_zeros.push_back({{"value", to_string(z.value)}, {"mult", z.multiplicity}});
        else
            r.common_zeros.push_back({{"value", z.value}, {"mult", z.multiplicity}});
    }
    try {
        r.ml_degree = ml_degree_formula(prof);
        if constexpr (is_exact_v<S>) r.algebraic_degree = ml_degree_algebraic(c);
    } catch (const AllEqualError& e) {
        r.boundary_mle = e.boundary_mle();
    }
    return r;
}

/// Approximate-mode report from data; degenerate observations are dropped first.
inline MlDegreeReport make_report(const Dataset& data, const EqualityPolicy& policy = {}) {
    const auto shift = c_shift(data);
    if (shift.values.empty()) throw NoDataError("every observation is degenerate (w = 0)");
    auto r = make_report(CShiftList<double>(shift.values), policy);
    r.dropped = shift.degenerate.size();
    return r;
}

inline nlohmann::json to_json(const MlDegreeReport& r) {
    nlohmann::json j{{"n", r.n},
                     {"p", r.p},
                     {"l", r.l},
                     {"m", r.m},
                     {"ml_degree", r.ml_degree ? nlohmann::json(*r.ml_degree) : nlohmann::json(nullptr)},
                     {"common_zeros", r.common_zeros},
                     {"mode", r.exact ? "exact" : "approx"}};
    if (r.boundary_mle) {
        j["all_equal"] = true;
        j["boundary_mle"] = *r.boundary_mle;
        j["message"] = "all c-values are equal: the score equation has no solutions, the likelihood is monotone "
                       "in theta and the MLE is theta = " +
                       std::to_string(*r.boundary_mle);
    }
    if (r.algebraic_degree) {
        j["oracle"] = {{"ml_degree_algebraic", *r.algebraic_degree},
                       {"agrees", r.ml_degree && *r.ml_degree == *r.algebraic_degree}};
    }
    if (!r.exact) {
        j["caveat"] = "c-values compared with a floating-point tolerance";
        j["dropped"] = r.dropped;
    }
    return j;
}

}  // namespace fgm

#endif  // FGM_MLDEGREE_HPP
