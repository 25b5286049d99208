#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "qtoric/delzant.hpp"
#include "qtoric/intlinalg.hpp"

namespace qtoric {

/// Counter-based generator: output i of stream s is a pure function of
/// (seed, s, i), so runs are reproducible and streams are disjoint.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() { return mix(seed_ ^ (stream_ * 0x9e3779b97f4a7c15ULL), counter_++); }

    /// Uniform double in [0, 1).
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    long next_int(long lo, long hi) {  // inclusive bounds
        return lo + long(next_u64() % std::uint64_t(hi - lo + 1));
    }

private:
    static std::uint64_t mix(std::uint64_t key, std::uint64_t ctr) {
        std::uint64_t z = key + ctr * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

struct SampleReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double max_roundtrip_error = 0.0;
    double max_level_residual = 0.0;
    std::vector<double> vertex_min_distance;          // sup-norm, per vertex
    std::vector<double> extent_gap;                   // per coordinate
    std::vector<std::pair<double, double>> sampled_extent;  // per coordinate
    std::vector<std::vector<double>> kept_samples;    // filled only on request
};

/// Rejection-sample mu uniformly from Delta, then lift to the zero level set
/// via the fiber formula with uniform phases.
inline std::pair<std::vector<double>, LevelPoint<double>> random_level_point(
    const DelzantData& D, CounterRng& rng, std::size_t attempt_budget = 1000000) {
    const Polytope& P = D.polytope();
    auto box = P.bounding_box();
    const std::size_t n = P.dim(), d = D.ambient_rank();
    for (std::size_t attempt = 0; attempt < attempt_budget; ++attempt) {
        std::vector<double> mu(n);
        for (std::size_t i = 0; i < n; ++i) mu[i] = rng.uniform(box[i].first, box[i].second);
        if (!P.contains(mu, 0.0)) continue;
        LevelPoint<double> p;
        p.moduli.resize(d);
        p.phases.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += D.quasilattice().generators(i, j).to_double() * mu[i];
            p.moduli[j] = s - D.offsets()[j].to_double();
        }
        for (std::size_t j = 0; j < d; ++j) p.phases[j] = rng.next_double();
        return {mu, p};
    }
    throw RejectionBudgetExceeded("rejection sampling acceptance ratio pathologically low");
}

/// Sample N points of the level set, push them through the moment map, and
/// quantify how the image cloud fills Delta. Image membership is checked
/// exactly against the halfspaces; the cloud statistics catch gaps.
inline SampleReport certify_moment_image(const DelzantData& D, std::size_t N,
                                         std::uint64_t seed, double tol = 1e-9,
                                         bool keep_samples = false) {
    const Polytope& P = D.polytope();
    const std::size_t n = P.dim();
    SampleReport rep;
    rep.samples = N;
    rep.seed = seed;
    rep.vertex_min_distance.assign(P.vertices().size(),
                                   std::numeric_limits<double>::infinity());
    rep.extent_gap.assign(n, 0.0);
    rep.sampled_extent.assign(n, {std::numeric_limits<double>::infinity(),
                                  -std::numeric_limits<double>::infinity()});
    if (N == 0) return rep;

    CounterRng rng(seed);
    for (std::size_t k = 0; k < N; ++k) {
        auto [mu, p] = random_level_point(D, rng);
        auto res = D.psi(p);
        for (double r : res) rep.max_level_residual = std::max(rep.max_level_residual, std::fabs(r));
        std::vector<double> mu2 = D.moment_map(p, tol);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::fabs(mu2[i] - mu[i]));
        rep.max_roundtrip_error = std::max(rep.max_roundtrip_error, err);
        for (std::size_t v = 0; v < P.vertices().size(); ++v) {
            double dist = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                dist = std::max(dist, std::fabs(mu2[i] - P.vertices()[v].coords[i].to_double()));
            rep.vertex_min_distance[v] = std::min(rep.vertex_min_distance[v], dist);
        }
        for (std::size_t i = 0; i < n; ++i) {
            rep.sampled_extent[i].first = std::min(rep.sampled_extent[i].first, mu2[i]);
            rep.sampled_extent[i].second = std::max(rep.sampled_extent[i].second, mu2[i]);
        }
        if (keep_samples) rep.kept_samples.push_back(std::move(mu2));
    }
    auto exact = P.exact_extent();
    for (std::size_t i = 0; i < n; ++i)
        rep.extent_gap[i] = std::max(std::fabs(rep.sampled_extent[i].first - exact[i].first.to_double()),
                                     std::fabs(rep.sampled_extent[i].second - exact[i].second.to_double()));
    return rep;
}

inline Int determinant_minor(const Matrix<Int>& A, const std::vector<std::size_t>& ri,
                             const std::vector<std::size_t>& ci);

/// Invariant-factor oracle for small matrices: d_1...d_k equals the gcd of all
/// k x k minors, so the factors follow by successive division. Independent of
/// the elimination-based smith_normal_form.
inline std::vector<Int> snf_oracle(const Matrix<Int>& A) {
    const std::size_t m = A.rows(), n = A.cols();
    const std::size_t kmax = std::min(m, n);
    std::vector<Int> minor_gcd(kmax + 1, 0);
    minor_gcd[0] = 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        Int g = 0;
        detail::for_each_subset(m, k, [&](const std::vector<std::size_t>& ri) {
            detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& ci) {
                // Laplace-free: direct k x k determinant by permutation expansion
                // is fine for k <= 4.
                Int det = determinant_minor(A, ri, ci);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            });
        });
        minor_gcd[k] = g;
    }
    std::vector<Int> factors;
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (minor_gcd[k] == 0) break;
        factors.push_back(minor_gcd[k] / minor_gcd[k - 1]);
    }
    return factors;
}

inline Int determinant_minor(const Matrix<Int>& A, const std::vector<std::size_t>& ri,
                             const std::vector<std::size_t>& ci) {
    const std::size_t k = ri.size();
    if (k == 1) return A(ri[0], ci[0]);
    Int det = 0;
    std::vector<std::size_t> sub_r(ri.begin() + 1, ri.end());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> sub_c;
        for (std::size_t l = 0; l < k; ++l)
            if (l != j) sub_c.push_back(ci[l]);
        Int cof = A(ri[0], ci[j]) * determinant_minor(A, sub_r, sub_c);
        if (j % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

}  // namespace qtoric
