#include <catch2/catch_amalgamated.hpp>

#include "qtoric/field.hpp"
#include "qtoric/verify.hpp"

using qtoric::CounterRng;
using qtoric::FieldScalar;
using qtoric::Rational;

namespace {

FieldScalar random_scalar(CounterRng& rng, long m) {
    Rational a(rng.next_int(-20, 20), rng.next_int(1, 9));
    Rational b(rng.next_int(-20, 20), rng.next_int(1, 9));
    return FieldScalar(a, b, m);
}

}  // namespace

TEST_CASE("conjugate product") {
    FieldScalar x(Rational(1), Rational(1), 2);
    FieldScalar y(Rational(1), Rational(-1), 2);
    CHECK(x * y == FieldScalar(-1));
}

TEST_CASE("rationalization identity") {
    FieldScalar x(Rational(1), Rational(1), 2);
    CHECK(FieldScalar(1) / x == FieldScalar(Rational(-1), Rational(1), 2));
}

TEST_CASE("componentwise addition") {
    FieldScalar x(Rational(1, 2));
    FieldScalar y(Rational(0), Rational(1, 3), 5);
    CHECK(x + y == FieldScalar(Rational(1, 2), Rational(1, 3), 5));
}

TEST_CASE("m=1 collapses to a rational") {
    FieldScalar x(Rational(1, 2), Rational(1, 3), 1);
    CHECK(x.is_rational());
    CHECK(x == FieldScalar(Rational(5, 6)));
}

TEST_CASE("discriminant mismatch is rejected") {
    FieldScalar x = FieldScalar::sqrt_of(2);
    FieldScalar y = FieldScalar::sqrt_of(3);
    CHECK_THROWS_AS(x + y, qtoric::DiscriminantMismatch);
    CHECK_THROWS_AS(x * y, qtoric::DiscriminantMismatch);
    // rationals combine with anything
    CHECK((FieldScalar(2) * x) == FieldScalar(Rational(0), Rational(2), 2));
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(FieldScalar(1) / FieldScalar(0), qtoric::DivisionByZero);
}

TEST_CASE("non-square-free discriminant is rejected") {
    CHECK_THROWS_AS(FieldScalar(Rational(0), Rational(1), 8), qtoric::NonSquareFreeDiscriminant);
    CHECK_THROWS_AS(FieldScalar(Rational(0), Rational(1), 12), qtoric::NonSquareFreeDiscriminant);
}

TEST_CASE("exact sign decisions") {
    // sqrt(2) - 1.41 > 0 but sqrt(2) - 1.42 < 0
    FieldScalar s2 = FieldScalar::sqrt_of(2);
    CHECK((s2 - FieldScalar(Rational(141, 100))).sign() == 1);
    CHECK((s2 - FieldScalar(Rational(142, 100))).sign() == -1);
    CHECK((s2 - s2).sign() == 0);
    CHECK(s2 > FieldScalar(1));
    CHECK(-s2 < FieldScalar(0));
}

TEST_CASE("field axioms on randomized scalars") {
    for (long m : {1L, 2L, 5L}) {
        CounterRng rng(7 + m);
        for (int i = 0; i < 200; ++i) {
            FieldScalar x = random_scalar(rng, m);
            FieldScalar y = random_scalar(rng, m);
            FieldScalar z = random_scalar(rng, m);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * (FieldScalar(1) / x) == FieldScalar(1));
        }
    }
}

TEST_CASE("float embedding") {
    FieldScalar x(Rational(1, 2), Rational(1, 3), 2);
    CHECK(x.to_double() == Catch::Approx(0.5 + std::sqrt(2.0) / 3.0).epsilon(1e-15));
}
