#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fixtures.hpp"

using namespace fixtures;
using qtoric::certify_moment_image;
using qtoric::CounterRng;
using qtoric::DelzantData;
using qtoric::Int;
using qtoric::Matrix;
using qtoric::SampleReport;
using qtoric::smith_normal_form;
using qtoric::snf_oracle;

namespace {

DelzantData data_of(Polytope P) {
    P.build();
    return DelzantData(std::move(P));
}

}  // namespace

TEST_CASE("counter rng is reproducible and stream-disjoint") {
    CounterRng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        auto x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
    }
    CounterRng s0(7, 0), s1(7, 1);
    bool all_equal = true;
    for (int i = 0; i < 100; ++i) all_equal = all_equal && (s0.next_u64() == s1.next_u64());
    CHECK_FALSE(all_equal);
}

TEST_CASE("random level points satisfy the level condition") {
    DelzantData D = data_of(square());
    CounterRng rng(1);
    for (int i = 0; i < 50; ++i) {
        auto [mu, p] = qtoric::random_level_point(D, rng);
        CHECK(D.polytope().contains(mu, 0.0));
        for (double r : D.psi(p)) CHECK(std::fabs(r) <= 1e-12);
        for (double r : p.moduli) CHECK(r >= -1e-15);
    }
}

TEST_CASE("interval samples stay in [0,1]") {
    DelzantData D = data_of(interval());
    CounterRng rng(2);
    for (int i = 0; i < 200; ++i) {
        auto [mu, p] = qtoric::random_level_point(D, rng);
        CHECK(mu[0] >= 0.0);
        CHECK(mu[0] <= 1.0);
    }
}

TEST_CASE("triangle acceptance ratio is about one half") {
    DelzantData D = data_of(triangle());
    CounterRng rng(3);
    // count acceptances indirectly: 2000 samples should need ~4000 proposals;
    // just verify the sampler terminates fast and fills the triangle
    SampleReport rep = certify_moment_image(D, 2000, 3);
    CHECK(rep.max_roundtrip_error <= 1e-12);
    for (double g : rep.extent_gap) CHECK(g < 0.05);
}

TEST_CASE("square cloud approaches every vertex at N = 1e4") {
    DelzantData D = data_of(square());
    SampleReport rep = certify_moment_image(D, 10000, 4);
    for (double d : rep.vertex_min_distance) CHECK(d <= 5e-2);
}

TEST_CASE("exhausted rejection budget throws") {
    DelzantData D = data_of(square());
    CounterRng rng(8);
    CHECK_THROWS_AS(qtoric::random_level_point(D, rng, 0),
                    qtoric::RejectionBudgetExceeded);
}

TEST_CASE("empty report for N = 0") {
    DelzantData D = data_of(square());
    SampleReport rep = certify_moment_image(D, 0, 9);
    CHECK(rep.samples == 0);
    CHECK(rep.max_roundtrip_error == 0.0);
    CHECK(rep.max_level_residual == 0.0);
    for (double d : rep.vertex_min_distance) CHECK(std::isinf(d));
}

TEST_CASE("sampled image never escapes the polytope") {
    for (Polytope Pfix : simple_corpus()) {
        DelzantData D = data_of(std::move(Pfix));
        SampleReport rep = certify_moment_image(D, 500, 11, 1e-9, true);
        for (const auto& mu : rep.kept_samples)
            CHECK(D.polytope().contains(mu, 1e-9));
    }
}

TEST_CASE("identical seeds give identical reports") {
    DelzantData D = data_of(golden_pentagon());
    SampleReport a = certify_moment_image(D, 300, 77, 1e-9, true);
    SampleReport b = certify_moment_image(D, 300, 77, 1e-9, true);
    CHECK(a.max_roundtrip_error == b.max_roundtrip_error);
    CHECK(a.max_level_residual == b.max_level_residual);
    CHECK(a.vertex_min_distance == b.vertex_min_distance);
    CHECK(a.sampled_extent == b.sampled_extent);
    CHECK(a.kept_samples == b.kept_samples);
}

TEST_CASE("coverage statistics are monotone in nested prefixes") {
    DelzantData D = data_of(square());
    SampleReport small = certify_moment_image(D, 500, 5);
    SampleReport large = certify_moment_image(D, 2000, 5);
    for (std::size_t i = 0; i < small.extent_gap.size(); ++i)
        CHECK(large.extent_gap[i] <= small.extent_gap[i]);
    for (std::size_t v = 0; v < small.vertex_min_distance.size(); ++v)
        CHECK(large.vertex_min_distance[v] <= small.vertex_min_distance[v]);
}

TEST_CASE("snf oracle examples") {
    CHECK(snf_oracle(Matrix<Int>{{2, 1}, {1, 0}}) == std::vector<Int>{1, 1});
    CHECK(snf_oracle(Matrix<Int>{{2, 0}, {0, 4}}) == std::vector<Int>{2, 4});
    CHECK(snf_oracle(Matrix<Int>{{6, 4}, {4, 6}}) == std::vector<Int>{2, 10});
    CHECK(snf_oracle(Matrix<Int>{{2, 0}, {0, 0}}) == std::vector<Int>{2});
}

TEST_CASE("snf oracle agrees with smith_normal_form on random matrices") {
    CounterRng rng(99);
    for (int trial = 0; trial < 600; ++trial) {
        std::size_t m = std::size_t(rng.next_int(1, 4));
        std::size_t n = std::size_t(rng.next_int(1, 4));
        Matrix<Int> A(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.next_int(-5, 5);
        CHECK(smith_normal_form(A).factors == snf_oracle(A));
    }
}
