#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qtoric/matrix.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/quasilattice.hpp"

namespace qtoric {

/// Point of the ambient space C^d, stored as moduli r_j = |z_j|^2 and phases
/// theta_j in turns: z_j = sqrt(r_j) * e^{2 pi i theta_j}.
template <class T>
struct LevelPoint {
    std::vector<T> moduli;
    std::vector<double> phases;  // defaulted to zero when omitted
};

struct RegularityCertificate {
    bool regular = true;
    std::vector<std::size_t> offending_face;  // active set where the check failed
};

/// The reduction bundle built from a simple polytope: the kernel basis of the
/// subtorus direction, the offsets, and the dimension bookkeeping.
class DelzantData {
public:
    explicit DelzantData(Polytope polytope) : P_(std::move(polytope)) {
        if (!P_.built()) P_.build();
        SimplicityReport rep = P_.check_simple();
        if (!rep.is_simple) throw NotSimple("polytope is not simple");
        Q_ = build_quasilattice(P_.generator_matrix());
        auto ker = kernel_basis(P_.generator_matrix());
        B_ = Matrix<FieldScalar>::from_rows(ker);
        for (const Halfspace& h : P_.facets()) lambda_.push_back(h.offset);
    }

    const Polytope& polytope() const { return P_; }
    const Quasilattice& quasilattice() const { return Q_; }
    const Matrix<FieldScalar>& kernel_matrix() const { return B_; }
    const std::vector<FieldScalar>& offsets() const { return lambda_; }

    std::size_t ambient_rank() const { return Q_.d; }        // d: rank of T
    std::size_t quotient_dim() const { return Q_.n; }        // n: dim of D = T/N
    std::size_t subgroup_dim() const { return Q_.d - Q_.n; } // dim N
    std::size_t reduced_dim() const { return 2 * Q_.n; }     // dim M = dim X - 2 dim N

    /// psi(p) = B * (r + lambda): the level map whose zero set descends to M.
    std::vector<FieldScalar> psi(const LevelPoint<FieldScalar>& p) const {
        std::vector<FieldScalar> shifted(Q_.d);
        for (std::size_t j = 0; j < Q_.d; ++j) shifted[j] = p.moduli[j] + lambda_[j];
        return B_.apply(shifted);
    }

    std::vector<double> psi(const LevelPoint<double>& p) const {
        std::vector<double> out(B_.rows(), 0.0);
        for (std::size_t i = 0; i < B_.rows(); ++i)
            for (std::size_t j = 0; j < Q_.d; ++j)
                out[i] += B_(i, j).to_double() * (p.moduli[j] + lambda_[j].to_double());
        return out;
    }

    /// 0 is a regular value iff at every face the inactive columns of B span.
    /// It suffices to check the vertices; this is equivalent to simplicity with
    /// independent vertex normals.
    RegularityCertificate check_regular_value() const {
        RegularityCertificate cert;
        const std::size_t codim = B_.rows();
        for (const Vertex& v : P_.vertices()) {
            Matrix<FieldScalar> cols(codim, Q_.d - v.active.size());
            std::size_t c = 0;
            for (std::size_t j = 0; j < Q_.d; ++j) {
                if (std::find(v.active.begin(), v.active.end(), j) != v.active.end()) continue;
                for (std::size_t i = 0; i < codim; ++i) cols(i, c) = B_(i, j);
                ++c;
            }
            if (rank(cols) < codim) {
                cert.regular = false;
                cert.offending_face = v.active;
                return cert;
            }
        }
        return cert;
    }

    /// Section of the level set over Delta: r_j = <mu, X_j> - lambda_j, phases 0.
    LevelPoint<FieldScalar> fiber_point(const std::vector<FieldScalar>& mu) const {
        if (!P_.contains(mu)) throw OutsidePolytope("point is outside the polytope");
        LevelPoint<FieldScalar> p;
        p.moduli.resize(Q_.d);
        p.phases.assign(Q_.d, 0.0);
        for (std::size_t j = 0; j < Q_.d; ++j)
            p.moduli[j] = P_.eval(j, mu) - lambda_[j];
        return p;
    }

    /// Induced moment map: solve <mu, X_j> = r_j + lambda_j on the designated
    /// vertex basis (lowest lexicographic active set), then check the remaining
    /// equations. Exact flavor: residuals must vanish exactly.
    std::vector<FieldScalar> moment_map(const LevelPoint<FieldScalar>& p) const {
        const auto& F = designated_vertex().active;
        Matrix<FieldScalar> A(Q_.n, Q_.n);
        std::vector<FieldScalar> b(Q_.n);
        for (std::size_t r = 0; r < Q_.n; ++r) {
            for (std::size_t c = 0; c < Q_.n; ++c) A(r, c) = Q_.generators(c, F[r]);
            b[r] = p.moduli[F[r]] + lambda_[F[r]];
        }
        auto mu = solve(A, b);
        if (!mu) throw NotOnLevelSet("vertex system is singular");
        for (std::size_t j = 0; j < Q_.d; ++j)
            if (P_.eval(j, *mu) != p.moduli[j] + lambda_[j])
                throw NotOnLevelSet("exact level-set residual is nonzero");
        return *mu;
    }

    std::vector<double> moment_map(const LevelPoint<double>& p, double tol) const {
        const auto& F = designated_vertex().active;
        const std::size_t n = Q_.n;
        // dense n x n solve with partial pivoting
        std::vector<std::vector<double>> A(n, std::vector<double>(n + 1));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) A[r][c] = Q_.generators(c, F[r]).to_double();
            A[r][n] = p.moduli[F[r]] + lambda_[F[r]].to_double();
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < n; ++r)
                if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
            std::swap(A[c], A[piv]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c) continue;
                double f = A[r][c] / A[c][c];
                for (std::size_t k = c; k <= n; ++k) A[r][k] -= f * A[c][k];
            }
        }
        std::vector<double> mu(n);
        for (std::size_t r = 0; r < n; ++r) mu[r] = A[r][n] / A[r][r];
        for (std::size_t j = 0; j < Q_.d; ++j) {
            double lhs = 0.0;
            for (std::size_t i = 0; i < n; ++i) lhs += Q_.generators(i, j).to_double() * mu[i];
            if (std::fabs(lhs - (p.moduli[j] + lambda_[j].to_double())) > tol)
                throw NotOnLevelSet("level-set residual exceeds tolerance");
        }
        return mu;
    }

private:
    const Vertex& designated_vertex() const { return P_.vertices().front(); }

    Polytope P_;
    Quasilattice Q_;
    Matrix<FieldScalar> B_;
    std::vector<FieldScalar> lambda_;
};

/// Rotate phases by phi (mod 1); moduli untouched, so the moment map is unchanged.
template <class T>
LevelPoint<T> act_torus(LevelPoint<T> p, const std::vector<double>& phi) {
    for (std::size_t j = 0; j < p.phases.size(); ++j) {
        double t = p.phases[j] + phi[j];
        p.phases[j] = t - std::floor(t);
    }
    return p;
}

}  // namespace qtoric
