#include <doctest.h>

#include "pool.hpp"
#include "repvol/error.hpp"
#include "repvol/seifert.hpp"

using namespace repvol;

TEST_CASE("euler number") {
    CHECK(euler_number(SeifertInvariants(1, {{2, 1}, {3, 1}, {7, 1}})) == Rational(41, 42));
    CHECK(euler_number(SeifertInvariants(2, {})) == Rational(0));
    CHECK(euler_number(SeifertInvariants(1, {{2, 1}, {2, -1}})) == Rational(0));
}

TEST_CASE("orbifold euler characteristic") {
    CHECK(orbifold_euler_characteristic(SeifertInvariants(1, {{2, 1}, {3, 1}, {7, 1}})) ==
          Rational(-85, 42));
    CHECK(orbifold_euler_characteristic(SeifertInvariants(1, {{2, 1}})) == Rational(-1, 2));
    CHECK(orbifold_euler_characteristic(SeifertInvariants(0, {})) == Rational(2));
    CHECK(orbifold_euler_characteristic(SeifertInvariants(1, {{1, 5}})) == Rational(0));
}

TEST_CASE("normalize") {
    CHECK(normalize(SeifertInvariants(1, {{1, 0}, {2, 1}})) == SeifertInvariants(1, {{2, 1}}));
    CHECK(normalize(SeifertInvariants(1, {{1, 2}, {1, 3}})) == SeifertInvariants(1, {{1, 5}}));
    CHECK(normalize(SeifertInvariants(2, {{3, 1}})) == SeifertInvariants(2, {{3, 1}}));
    CHECK(normalize(SeifertInvariants(1, {{1, 2}, {5, 2}, {1, -2}})) ==
          SeifertInvariants(1, {{5, 2}}));
}

TEST_CASE("classify geometry") {
    CHECK(classify_geometry(SeifertInvariants(1, {{2, 1}})) == GeometryClass::SL2RTilde);
    CHECK(classify_geometry(SeifertInvariants(2, {})) == GeometryClass::H2xR);
    CHECK(classify_geometry(SeifertInvariants(1, {})) == GeometryClass::Euclidean);
    CHECK(classify_geometry(SeifertInvariants(1, {{1, 1}})) == GeometryClass::Nil);
    CHECK(classify_geometry(SeifertInvariants(0, {{1, 1}})) == GeometryClass::S3);
    CHECK(classify_geometry(SeifertInvariants(0, {})) == GeometryClass::S2xR);
    CHECK(classify_geometry(SeifertInvariants(0, {{2, 1}, {3, 1}, {7, -1}})) ==
          GeometryClass::SL2RTilde);
    CHECK(to_string(GeometryClass::SL2RTilde) == "SL2R-tilde");
}

TEST_CASE("invalid invariants are rejected") {
    CHECK_THROWS_AS(SeifertInvariants(-1, {}), PreconditionError);
    CHECK_THROWS_AS(SeifertInvariants(1, {{0, 1}}), PreconditionError);
    CHECK_THROWS_WITH_AS(SeifertInvariants(1, {{2, 1}, {-3, 1}}), doctest::Contains("fibers[1]"),
                         PreconditionError);
}

TEST_CASE("property: normalize preserves e and chi; classification matches the criterion") {
    for (const auto& s : testing::random_seifert_pool(300, 7)) {
        const auto n = normalize(s);
        CHECK(euler_number(n) == euler_number(s));
        CHECK(orbifold_euler_characteristic(n) == orbifold_euler_characteristic(s));
        for (const Fiber& f : n.fibers()) {
            if (f.a == 1) CHECK(&f == &n.fibers().back());
        }
        const bool criterion =
            !euler_number(s).is_zero() && orbifold_euler_characteristic(s).sign() < 0;
        CHECK((classify_geometry(s) == GeometryClass::SL2RTilde) == criterion);
        CHECK(classify_geometry(s) != GeometryClass::H3);
        CHECK(classify_geometry(s) != GeometryClass::Sol);
    }
}
