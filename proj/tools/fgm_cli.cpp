// Command-line front end for the FGM bivariate exponential toolkit.
//
// Exit codes: 0 success, 1 bad arguments, 2 unreadable or malformed data,
// 3 statistically degenerate data (no observation carries information on theta).

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgm/fgm.hpp"

namespace {

constexpr int kExitArgs = 1;
constexpr int kExitData = 2;
constexpr int kExitNoData = 3;

struct Globals {
    bool pretty = false;
};

void emit(const nlohmann::json& j, const Globals& g) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << '\n'; }

int run_sample(std::size_t n, double theta, std::uint64_t seed, const std::string& out) {
    const auto data = fgm::sample(n, fgm::Theta(theta), seed);
    fgm::write_csv(std::filesystem::path(out), data);
    return 0;
}

int run_fit(const std::string& in, const Globals& g) {
    const auto data = fgm::read_csv(std::filesystem::path(in));
    emit(fgm::to_json(fgm::fit(data)), g);
    return 0;
}

int run_mldegree(const std::vector<std::string>& c_args, const std::string& in, const Globals& g) {
    fgm::MlDegreeReport report;
    if (!c_args.empty()) {
        std::vector<fgm::Rational> values;
        for (const auto& s : c_args) values.push_back(fgm::parse_rational(s));
        report = fgm::make_report(fgm::CShiftList<fgm::Rational>(std::move(values)));
    } else {
        report = fgm::make_report(fgm::read_csv(std::filesystem::path(in)));
    }
    emit(fgm::to_json(report), g);
    return 0;
}

int run_verify(const fgm::CampaignConfig& cfg, const Globals& g) {
    const auto res = fgm::run_campaign(cfg);
    emit(fgm::to_json(res), g);
    return res.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FGM bivariate exponential: sampling, ML fitting and ML-degree analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--pretty", g.pretty, "Indent JSON output");

    auto* sample = app.add_subcommand("sample", "Simulate an x,y CSV dataset");
    std::size_t n = 0;
    double theta = 0.0;
    std::uint64_t seed = 0;
    std::string out;
    sample->add_option("--n", n, "Number of observations")->required()->check(CLI::PositiveNumber);
    sample->add_option("--theta", theta, "Association parameter in [-1, 1]")->required()->check(CLI::Range(-1.0, 1.0));
    sample->add_option("--seed", seed, "Generator seed")->required();
    sample->add_option("--out", out, "Output CSV path")->required();

    auto* fit = app.add_subcommand("fit", "Maximum-likelihood estimate of theta from a CSV dataset");
    std::string fit_in;
    fit->add_option("--in", fit_in, "Input CSV path")->required();

    auto* mld = app.add_subcommand("mldegree", "ML-degree of theta for exact c-values or a dataset");
    std::vector<std::string> c_args;
    std::string mld_in;
    auto* c_opt = mld->add_option("--c", c_args, "c-values as p/q or integer literals")->allow_extra_args();
    auto* in_opt = mld->add_option("--in", mld_in, "Input CSV path (approximate mode)");
    c_opt->excludes(in_opt);
    mld->require_option(1);

    auto* verify = app.add_subcommand("verify", "Randomised check of the ML-degree theorems");
    fgm::CampaignConfig cfg;
    std::vector<std::string> patterns;
    verify->add_option("--trials", cfg.trials, "Number of trials")->capture_default_str()->check(CLI::Range(1, std::numeric_limits<int>::max()));
    verify->add_option("--n-max", cfg.n_max, "Largest c-list size")->capture_default_str()->check(CLI::Range(2, 1000));
    verify->add_option("--seed", cfg.seed, "Campaign seed")->capture_default_str();
    verify->add_option("--pattern", patterns, "Force repetition patterns: 'n' (all equal), '0', or sizes like '2,2'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitArgs;
    }

    try {
        if (*sample) return run_sample(n, theta, seed, out);
        if (*fit) return run_fit(fit_in, g);
        if (*mld) return run_mldegree(c_args, mld_in, g);
        if (*verify) {
            for (const auto& p : patterns) cfg.forced_patterns.push_back(fgm::parse_pattern(p));
            return run_verify(cfg, g);
        }
    } catch (const fgm::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const fgm::NoDataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoData;
    } catch (const fgm::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitArgs;
}
