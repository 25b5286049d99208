#include <catch2/catch_amalgamated.hpp>

#include "qtoric/field.hpp"
#include "qtoric/matrix.hpp"
#include "qtoric/verify.hpp"

using qtoric::CounterRng;
using qtoric::FieldScalar;
using qtoric::Matrix;
using qtoric::Rational;

namespace {

FieldScalar fs(long n, long d = 1) { return FieldScalar(Rational(n, d)); }

Matrix<FieldScalar> random_matrix(CounterRng& rng, std::size_t r, std::size_t c, long m) {
    Matrix<FieldScalar> M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            M(i, j) = FieldScalar(Rational(rng.next_int(-4, 4)),
                                  Rational(rng.next_int(-2, 2)), m);
    return M;
}

}  // namespace

TEST_CASE("kernel of an irrational row") {
    Matrix<FieldScalar> M{{fs(1), -FieldScalar::sqrt_of(2)}};
    auto ker = kernel_basis(M);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == FieldScalar::sqrt_of(2));
    CHECK(ker[0][1] == fs(1));
}

TEST_CASE("kernel of the identity is empty") {
    Matrix<FieldScalar> M{{fs(1), fs(0)}, {fs(0), fs(1)}};
    CHECK(kernel_basis(M).empty());
}

TEST_CASE("opposite-normal cancellation") {
    // columns e1, e2, -e1, -e2 as a map R^4 -> R^2
    Matrix<FieldScalar> M{{fs(1), fs(0), fs(-1), fs(0)}, {fs(0), fs(1), fs(0), fs(-1)}};
    auto ker = kernel_basis(M);
    REQUIRE(ker.size() == 2);
    CHECK(ker[0] == std::vector<FieldScalar>{fs(1), fs(0), fs(1), fs(0)});
    CHECK(ker[1] == std::vector<FieldScalar>{fs(0), fs(1), fs(0), fs(1)});
}

TEST_CASE("kernel vectors annihilate and rank-nullity holds") {
    CounterRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = std::size_t(rng.next_int(1, 4));
        std::size_t c = std::size_t(rng.next_int(1, 5));
        Matrix<FieldScalar> M = random_matrix(rng, r, c, 3);
        auto ker = kernel_basis(M);
        for (const auto& v : ker) {
            auto image = M.apply(v);
            for (const auto& x : image) CHECK(x.is_zero());
        }
        CHECK(ker.size() + rank(M) == c);
    }
}

TEST_CASE("solve square systems exactly") {
    Matrix<FieldScalar> A{{fs(2), fs(1)}, {fs(1), fs(1)}};
    auto x = solve(A, {fs(3), fs(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == fs(1));
    CHECK((*x)[1] == fs(1));

    Matrix<FieldScalar> singular{{fs(1), fs(1)}, {fs(2), fs(2)}};
    CHECK_FALSE(solve(singular, {fs(1), fs(1)}).has_value());
}
