#include "catch2/catch_amalgamated.hpp"

#include "fgm/rational.hpp"

using fgm::parse_rational;
using fgm::Rational;

TEST_CASE("parse p/q and bare integers")
{
	CHECK(parse_rational("3/4") == Rational(3, 4));
	CHECK(parse_rational("-4") == Rational(-4));
	CHECK(parse_rational("+7") == Rational(7));
	CHECK(parse_rational("6/8") == Rational(3, 4));
	CHECK(parse_rational("-10/4").get_den() == 2);
}

TEST_CASE("malformed rational literals are rejected")
{
	CHECK_THROWS_AS(parse_rational("1/0"), fgm::DomainError);
	CHECK_THROWS_AS(parse_rational("abc"), fgm::DomainError);
	CHECK_THROWS_AS(parse_rational("1/-2"), fgm::DomainError);
	CHECK_THROWS_AS(parse_rational(""), fgm::DomainError);
	CHECK_THROWS_AS(parse_rational("1.5"), fgm::DomainError);
}

TEST_CASE("canonical p/q output")
{
	CHECK(fgm::to_string(Rational(2)) == "2/1");
	CHECK(fgm::to_string(parse_rational("-6/4")) == "-3/2");
	CHECK(parse_rational(fgm::to_string(Rational(-5, 3))) == Rational(-5, 3));
}
