#ifndef FGM_VERIFY_HPP
#define FGM_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "json.hpp"
#include "mldegree.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace fgm {

/// Sizes of the repeated groups of a c-list; `all_equal` means one group of size n.
struct RepetitionPattern {
    std::vector<int> repeated;
    bool all_equal = false;

    int min_size() const {
        return all_equal ? 2 : std::max(2, std::accumulate(repeated.begin(), repeated.end(), 0));
    }
};

/// "n" (all equal), "0" / "" (all distinct) or a comma list of group sizes, e.g. "2,3".
inline RepetitionPattern parse_pattern(std::string_view text) {
    RepetitionPattern pat;
    if (text == "n") {
        pat.all_equal = true;
        return pat;
    }
    if (text.empty() || text == "0") return pat;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("bad repetition pattern '" + std::string(text) + "'");
        }
        if (v < 2) throw DomainError("repeated group sizes must be >= 2");
        pat.repeated.push_back(v);
    }
    return pat;
}

namespace detail {

/// Nonzero rational with numerator and denominator in [1, 20] and a random sign.
inline Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> mag(1, 20);
    const int num = mag(rng);
    const int den = mag(rng);
    Rational r(rng() & 1 ? -num : num, den);
    r.canonicalize();
    return r;
}

inline Rational fresh_value(std::mt19937_64& rng, const std::vector<Rational>& used) {
    for (;;) {
        Rational r = small_rational(rng);
        if (std::find(used.begin(), used.end(), r) == used.end()) return r;
    }
}

}  // namespace detail

/// Random repetition pattern for a list of size n with l repeated groups
/// (reduced when n is too small). The all-equal shape is never produced.
inline RepetitionPattern random_pattern(std::mt19937_64& rng, int n, int l) {
    l = std::min(l, n / 2);
    RepetitionPattern pat;
    if (l == 0) return pat;
    pat.repeated.assign(l, 2);
    int extra = std::uniform_int_distribution<int>(0, n - 2 * l)(rng);
    std::uniform_int_distribution<int> pick(0, l - 1);
    while (extra-- > 0) ++pat.repeated[pick(rng)];
    if (l == 1 && pat.repeated[0] == n) {
        if (n >= 3)
            --pat.repeated[0];
        else
            pat.repeated.clear();
    }
    return pat;
}

/// Shuffled exact c-list of size n realising the pattern.
inline std::vector<Rational> random_c_values(std::mt19937_64& rng, int n, const RepetitionPattern& pat) {
    std::vector<Rational> distinct;
    std::vector<Rational> out;
    out.reserve(n);
    if (pat.all_equal) {
        const Rational v = detail::small_rational(rng);
        out.assign(n, v);
        return out;
    }
    for (int size : pat.repeated) {
        distinct.push_back(detail::fresh_value(rng, distinct));
        out.insert(out.end(), size, distinct.back());
    }
    while (static_cast<int>(out.size()) < n) {
        distinct.push_back(detail::fresh_value(rng, distinct));
        out.push_back(distinct.back());
    }
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

struct CampaignConfig {
    int trials = 500;
    int n_min = 2;
    int n_max = 10;
    std::uint64_t seed = 7;
    /// When non-empty, trial t uses forced_patterns[t % size].
    std::vector<RepetitionPattern> forced_patterns;
};

struct CampaignFailure {
    int trial;
    std::string check;
    std::vector<std::string> c_values;
    std::string detail;

    friend bool operator<(const CampaignFailure& a, const CampaignFailure& b) {
        return std::tie(a.trial, a.check, a.detail) < std::tie(b.trial, b.check, b.detail);
    }
};

struct CampaignResult {
    CampaignConfig config;
    int checked = 0;
    int skipped = 0;
    std::vector<std::string> notes;
    std::vector<CampaignFailure> failures;
    /// Trials per number of repeated groups l.
    std::vector<int> l_coverage;
    /// Checked trials whose repeated groups cover all but one value (m = n - 1).
    int m_equals_n_minus_1 = 0;

    bool passed() const { return failures.empty(); }
};

/// Checks of a single exact c-list; returns the failure descriptions.
inline std::vector<std::pair<std::string, std::string>> check_c_list(const CShiftList<Rational>& c) {
    std::vector<std::pair<std::string, std::string>> bad;
    const auto prof = profile(c);

    const int formula = ml_degree_formula(prof);
    const int algebraic = ml_degree_algebraic(c);
    if (formula != algebraic)
        bad.emplace_back("ml_degree", "formula " + std::to_string(formula) + " != algebraic " + std::to_string(algebraic));

    const RationalPoly k = build_k(c);
    const RationalPoly h = derivative(k);
    const bool has_common = !h.is_zero() && !gcd(h, k).is_constant();
    if (has_common != (prof.l > 0))
        bad.emplace_back("common_zero_iff_repeat",
                         std::string("gcd non-constant = ") + (has_common ? "true" : "false") + ", l = " + std::to_string(prof.l));

    for (const auto& g : prof.groups) {
        if (h.is_zero()) break;
        const int got = root_multiplicity(h, Rational(-g.value));
        if (got != g.multiplicity - 1)
            bad.emplace_back("zero_multiplicity", "value " + to_string(g.value) + " repeated " +
                                                       std::to_string(g.multiplicity) + " times, -c divides h " +
                                                       std::to_string(got) + " times");
    }
    return bad;
}

inline CampaignResult run_campaign(const CampaignConfig& cfg) {
    if (cfg.trials < 1) throw DomainError("trials must be >= 1");
    if (cfg.n_max < 2 || cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw DomainError("need 1 <= n_min <= n_max and n_max >= 2");
    for (const auto& pat : cfg.forced_patterns)
        if (pat.min_size() > cfg.n_max) throw DomainError("forced pattern does not fit in n_max");

    CampaignResult res;
    res.config = cfg;
    res.l_coverage.assign(4, 0);
    for (int t = 0; t < cfg.trials; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);

        RepetitionPattern pat;
        int n = 0;
        if (!cfg.forced_patterns.empty()) {
            pat = cfg.forced_patterns[t % cfg.forced_patterns.size()];
            n = std::uniform_int_distribution<int>(std::max(cfg.n_min, pat.min_size()), cfg.n_max)(rng);
        } else {
            n = std::uniform_int_distribution<int>(cfg.n_min, cfg.n_max)(rng);
            pat = random_pattern(rng, n, t % 4);
        }

        const auto values = random_c_values(rng, n, pat);
        const CShiftList<Rational> c(values);
        const auto prof = profile(c);
        if (prof.all_equal()) {
            ++res.skipped;
            res.notes.push_back("trial " + std::to_string(t) +
                                ": all c-values equal, excluded from the ML-degree formula (boundary MLE)");
            continue;
        }

        ++res.checked;
        if (prof.l >= static_cast<int>(res.l_coverage.size())) res.l_coverage.resize(prof.l + 1, 0);
        ++res.l_coverage[prof.l];
        if (prof.m == prof.n - 1) ++res.m_equals_n_minus_1;

        for (auto& [check, detail] : check_c_list(c)) {
            CampaignFailure f{t, std::move(check), {}, std::move(detail)};
            for (const auto& v : values) f.c_values.push_back(to_string(v));
            res.failures.push_back(std::move(f));
        }
    }
    std::sort(res.failures.begin(), res.failures.end());
    return res;
}

inline nlohmann::json to_json(const CampaignResult& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"trial", f.trial}, {"check", f.check}, {"c", f.c_values}, {"detail", f.detail}});
    return {{"trials", r.config.trials},
            {"n_range", {r.config.n_min, r.config.n_max}},
            {"seed", r.config.seed},
            {"checked", r.checked},
            {"skipped", r.skipped},
            {"notes", r.notes},
            {"l_coverage", r.l_coverage},
            {"failures", std::move(failures)},
            {"passed", r.passed()}};
}

}  // namespace fgm

#endif  // FGM_VERIFY_HPP
