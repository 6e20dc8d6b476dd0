#include "catch2/catch_amalgamated.hpp"

#include <algorithm>
#include <random>

#include "fgm/roots.hpp"
#include "test_support.hpp"

using namespace fgm;
using Catch::Approx;

namespace {

std::vector<double> sorted_real_parts(const RootSet& rs)
{
	std::vector<double> out;
	for (const auto& r : rs.roots)
		for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value.real());
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

TEST_CASE("linear polynomial")
{
	const auto rs = complex_roots(RealPoly({6.0, 2.0}));
	REQUIRE(rs.roots.size() == 1);
	CHECK(rs.roots[0].value == std::complex<double>(-3.0, 0.0));
	CHECK(rs.roots[0].multiplicity == 1);
	CHECK(rs.converged);
}

TEST_CASE("roots of h for c = (1, 1, 2)")
{
	const auto rs = complex_roots(RealPoly({5.0, 8.0, 3.0}));
	CHECK(rs.converged);
	const auto re = sorted_real_parts(rs);
	REQUIRE(re.size() == 2);
	CHECK(re[0] == Approx(-5.0 / 3.0).epsilon(1e-12));
	CHECK(re[1] == Approx(-1.0).epsilon(1e-12));
	CHECK(rs.max_residual() <= 1e-8);
}

TEST_CASE("a double root is merged")
{
	const auto rs = complex_roots(RealPoly({1.0, 2.0, 1.0}));
	REQUIRE(rs.roots.size() == 1);
	CHECK(rs.roots[0].multiplicity == 2);
	CHECK(std::abs(rs.roots[0].value - std::complex<double>(-1.0, 0.0)) < 1e-7);
}

TEST_CASE("complex conjugate roots")
{
	const auto rs = complex_roots(RealPoly({1.0, 0.0, 1.0}));
	REQUIRE(rs.roots.size() == 2);
	for (const auto& r : rs.roots) {
		CHECK(std::abs(r.value.real()) < 1e-12);
		CHECK(std::abs(std::abs(r.value.imag()) - 1.0) < 1e-12);
	}
}

TEST_CASE("degree zero is rejected")
{
	CHECK_THROWS_AS(complex_roots(RealPoly({3.0})), DomainError);
	CHECK_THROWS_AS(complex_roots(RealPoly{}), DomainError);
}

TEST_CASE("roots of h are real, counted fully and interlace -c")
{
	std::mt19937_64 rng(123);
	std::uniform_real_distribution<double> mag(1.0, 10.0);
	for (int trial = 0; trial < 100; ++trial) {
		const int n = 2 + static_cast<int>(rng() % 19);
		std::vector<double> c(n);
		for (auto& x : c) x = (rng() & 1 ? -1.0 : 1.0) * mag(rng);
		const auto h = build_h(CShiftList<double>(c));
		RootOptions opts;
		opts.initial_radius = 1.0 + std::abs(*std::max_element(c.begin(), c.end(), [](double a, double b) {
			return std::abs(a) < std::abs(b);
		}));
		const auto rs = complex_roots(h, opts);
		CHECK(rs.total_multiplicity() == n - 1);
		CHECK(rs.max_residual() <= 1e-8);

		double scale = 1.0;
		for (double x : c) scale = std::max(scale, std::abs(x));
		for (const auto& r : rs.roots) CHECK(std::abs(r.value.imag()) <= 1e-7 * scale);

		std::vector<double> poles;
		for (double x : c) poles.push_back(-x);
		std::sort(poles.begin(), poles.end());
		const auto re = sorted_real_parts(rs);
		for (std::size_t i = 0; i < re.size(); ++i) {
			CHECK(re[i] >= poles[i] - 1e-7 * scale);
			CHECK(re[i] <= poles[i + 1] + 1e-7 * scale);
		}
	}
}

TEST_CASE("score root examples")
{
	CHECK(score_root_in_open_interval(std::vector<double>{0.5, -0.5}) == 0.0);
	CHECK_FALSE(score_root_in_open_interval(std::vector<double>{0.5}).has_value());
	CHECK_THROWS_AS(score_root_in_open_interval(std::vector<double>{0.0, 0.0}), DomainError);

	const std::vector<double> w{0.9, -0.3, -0.3};
	const auto r = score_root_in_open_interval(w);
	REQUIRE(r.has_value());
	const double oracle = testing::grid_score_root(w, 1000000);
	CHECK(std::abs(*r - oracle) < 1e-9);
	CHECK(std::abs(score(w, Theta(*r))) <= 1e-12);
}

TEST_CASE("score root with a weight of exactly one")
{
	// w = 1 puts a pole at theta = -1; the left endpoint is offset inward.
	const std::vector<double> w{1.0, -0.6, -0.6, -0.6};
	const auto r = score_root_in_open_interval(w);
	REQUIRE(r.has_value());
	CHECK(std::abs(*r - testing::grid_score_root(w, 1000000)) < 1e-8);
}

TEST_CASE("score root is a local maximum of the log-likelihood")
{
	std::mt19937_64 rng(77);
	for (int trial = 0; trial < 100; ++trial) {
		const auto d = sample(30, Theta(std::uniform_real_distribution<double>(-0.9, 0.9)(rng)), rng());
		const auto r = score_root_in_open_interval(d);
		if (!r) continue;
		const auto w = d.weights();
		const double l = log_likelihood(w, Theta(*r));
		CHECK(l >= log_likelihood(w, Theta(std::max(-1.0, *r - 1e-6))));
		CHECK(l >= log_likelihood(w, Theta(std::min(1.0, *r + 1e-6))));
		if (*r - 1e-6 > -1.0 && *r + 1e-6 < 1.0) {
			CHECK(score(w, Theta(*r - 1e-6)) > 0.0);
			CHECK(score(w, Theta(*r + 1e-6)) < 0.0);
		}
	}
}

TEST_CASE("RootSet JSON")
{
	const auto j = to_json(complex_roots(RealPoly({1.0, 2.0, 1.0})));
	REQUIRE(j["roots"].size() == 1);
	CHECK(j["roots"][0]["mult"] == 2);
	CHECK(j["roots"][0].contains("re"));
	CHECK(j["roots"][0].contains("im"));
}

TEST_CASE("repeated c-values give merged multiple roots of h")
{
	const auto rs = complex_roots(build_h(CShiftList<double>({2.0, 2.0, 2.0, 2.0, 5.0, -4.0})));
	CHECK(rs.converged);
	CHECK(rs.total_multiplicity() == 5);
	const auto triple = std::find_if(rs.roots.begin(), rs.roots.end(), [](const Root& r) { return r.multiplicity == 3; });
	REQUIRE(triple != rs.roots.end());
	CHECK(std::abs(triple->value - std::complex<double>(-2.0, 0.0)) < 1e-7);
}
