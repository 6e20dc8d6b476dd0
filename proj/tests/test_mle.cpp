#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "fgm/mle.hpp"
#include "test_support.hpp"

using namespace fgm;

namespace {

std::vector<double> negated(std::span<const double> w)
{
	std::vector<double> out;
	for (double x : w) out.push_back(-x);
	return out;
}

void check_invariants(std::span<const double> w, const FitResult& r)
{
	CHECK(r.theta_hat >= -1.0);
	CHECK(r.theta_hat <= 1.0);
	if (!r.at_boundary) {
		REQUIRE(r.interior_root.has_value());
		CHECK(*r.interior_root == r.theta_hat);
		CHECK(std::abs(score(w, Theta(r.theta_hat))) <= 1e-10);
	}
	for (double t : {-1.0, 0.0, 1.0}) CHECK(r.loglik >= log_likelihood(w, Theta(t)));
}

} // namespace

TEST_CASE("fit examples")
{
	const std::vector<double> sym{0.5, -0.5};
	auto r = fit(sym);
	CHECK(r.theta_hat == 0.0);
	CHECK_FALSE(r.at_boundary);
	check_invariants(sym, r);

	const std::vector<double> one{0.5};
	r = fit(one);
	CHECK(r.theta_hat == 1.0);
	CHECK(r.at_boundary);
	check_invariants(one, r);

	const std::vector<double> same(7, 0.5);
	r = fit(same);
	CHECK(r.theta_hat == 1.0);
	CHECK(r.at_boundary);

	const std::vector<double> same_neg(4, -0.25);
	CHECK(fit(same_neg).theta_hat == -1.0);
}

TEST_CASE("degenerate observations are dropped")
{
	const std::vector<double> w{0.0, 0.5, 0.0, -0.5};
	const auto r = fit(w);
	CHECK(r.n_effective == 2);
	CHECK(r.dropped == 2);
	CHECK(r.theta_hat == 0.0);

	CHECK_THROWS_AS(fit(std::vector<double>{0.0, 0.0}), NoDataError);
	CHECK_THROWS_AS(fit(std::vector<double>{}), NoDataError);
}

TEST_CASE("boundary fit without an interior root")
{
	// Distinct positive weights: score > 0 on [-1, 1].
	const std::vector<double> w{0.2, 0.7, 0.4};
	const auto r = fit(w);
	CHECK(r.at_boundary);
	CHECK(r.theta_hat == 1.0);
	CHECK_FALSE(r.boundary_tie);
	check_invariants(w, r);
	CHECK(fit(negated(w)).theta_hat == -1.0);
}

TEST_CASE("weight of one does not break the left endpoint")
{
	const std::vector<double> w{1.0, 0.5, 0.25};
	const auto r = fit(w);
	CHECK(r.theta_hat == 1.0);
	check_invariants(w, r);
}

TEST_CASE("fit matches a grid scan on simulated data")
{
	std::mt19937_64 rng(2718);
	std::uniform_real_distribution<double> th(-1.0, 1.0);
	for (int trial = 0; trial < 100; ++trial) {
		const auto d = sample(20 + rng() % 80, Theta(th(rng)), rng());
		const auto r = fit(d);
		const auto [grid_t, grid_l] = testing::grid_argmax(d.weights(), 100001);
		CHECK(r.loglik >= grid_l - 1e-6);
		check_invariants(d.weights(), r);
		if (!r.at_boundary) {
			CHECK(log_likelihood(d, Theta(std::max(-1.0, r.theta_hat - 1e-4))) < r.loglik);
			CHECK(log_likelihood(d, Theta(std::min(1.0, r.theta_hat + 1e-4))) < r.loglik);
		}
		CHECK(fit(negated(d.weights())).theta_hat == -r.theta_hat);
	}
}

TEST_CASE("estimate is consistent on a large sample")
{
	const auto d = sample(10000, Theta(0.5), 31415);
	CHECK(std::abs(fit(d).theta_hat - 0.5) < 0.1);
}

TEST_CASE("profile log-likelihood")
{
	const std::vector<double> w{0.3, 0.6};
	const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
	const auto prof = profile_loglik(w, grid);
	REQUIRE(prof.size() == 5);
	CHECK(prof[2].second == 0.0);
	for (std::size_t i = 1; i < prof.size(); ++i) CHECK(prof[i].second > prof[i - 1].second);

	CHECK(profile_loglik(w, std::vector<double>{}).empty());
	const auto pole = profile_loglik(std::vector<double>{1.0}, std::vector<double>{-1.0});
	CHECK(std::isinf(pole[0].second));
}

TEST_CASE("FitResult JSON")
{
	const auto j = to_json(fit(std::vector<double>{0.5, -0.5, 0.0}));
	CHECK(j["theta_hat"] == 0.0);
	CHECK(j["at_boundary"] == false);
	CHECK(j["n_effective"] == 2);
	CHECK(j["dropped"] == 1);
	CHECK(j.contains("loglik"));
}
