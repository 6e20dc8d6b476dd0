#include "catch2/catch_amalgamated.hpp"

#include <sstream>

#include "fgm/csv.hpp"

using namespace fgm;

namespace {

std::size_t failing_line(const std::string& text)
{
	std::istringstream in(text);
	try {
		read_csv(in);
	} catch (const DataError& e) {
		return e.line();
	}
	return 0;
}

} // namespace

TEST_CASE("reads x,y rows")
{
	std::istringstream in("x,y\n0.5,1.25\r\n 2 , 3e-1\n\n0,0\n");
	const auto d = read_csv(in);
	REQUIRE(d.n() == 3);
	CHECK(d.observations()[0] == Observation(0.5, 1.25));
	CHECK(d.observations()[1] == Observation(2.0, 0.3));
	CHECK(d.observations()[2] == Observation(0.0, 0.0));
}

TEST_CASE("header only gives an empty dataset")
{
	std::istringstream in("x,y\n");
	CHECK(read_csv(in).n() == 0);
}

TEST_CASE("bad rows are reported with their line number")
{
	CHECK(failing_line("") == 1);
	CHECK(failing_line("a,b\n1,2\n") == 1);
	CHECK(failing_line("x,y\n1,2\n-1,2\n") == 3);
	CHECK(failing_line("x,y\n1,abc\n") == 2);
	CHECK(failing_line("x,y\n1\n") == 2);
	CHECK(failing_line("x,y\n1,2,3\n") == 2);
	CHECK(failing_line("x,y\n1,inf\n") == 2);
	CHECK(failing_line("x,y\n1,2x\n") == 2);
}

TEST_CASE("write then read is lossless")
{
	const auto d = sample(200, Theta(-0.4), 9);
	std::stringstream buf;
	write_csv(buf, d);
	const auto back = read_csv(buf);
	CHECK(back.observations() == d.observations());
}
