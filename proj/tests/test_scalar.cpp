#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainfty/scalar.hpp"

using namespace ainfty;

TEST_CASE("rational arithmetic is exact and canonical")
{
    Field q;
    Scalar a(q, 1, 3), b(q, 2, 6);
    CHECK(a == b);
    CHECK((a + b).str() == "2/3");
    CHECK((a - b).is_zero());
    CHECK((a * Scalar(q, 3)).is_one());
    CHECK((Scalar(q, 7) / Scalar(q, -2)).str() == "-7/2");
    CHECK(Scalar(q, -4, -8).str() == "1/2");
    CHECK_THROWS_AS(Scalar(q, 1) / Scalar(q, 0), MathError);
}

TEST_CASE("prime field arithmetic")
{
    Field f5{5};
    Scalar a(f5, 7); // = 2
    CHECK(a.str() == "2");
    CHECK((a + Scalar(f5, 3)).is_zero());
    CHECK((a * a).str() == "4");
    CHECK(a.inverse().str() == "3"); // 2*3 = 6 = 1 mod 5
    CHECK((-a).str() == "3");
    CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(Field{7}, 1), MathError);
}

TEST_CASE("parse round trips lowest terms")
{
    Field q;
    for (const char* s : {"0", "1", "-1", "3/7", "-22/7"}) {
        CHECK(Scalar::parse(q, s).str() == s);
    }
    CHECK(Scalar::parse(q, "4/6").str() == "2/3");
    CHECK_THROWS_AS(Scalar::parse(q, "1.5"), MathError);
    CHECK(Field::parse("Fp:13").p == 13);
    CHECK(Field::parse("Q").is_rational());
    CHECK_THROWS_AS(Field::parse("R"), MathError);
}
