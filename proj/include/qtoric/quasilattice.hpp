#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "qtoric/intlinalg.hpp"
#include "qtoric/matrix.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

/// The Z-module generated by vectors X_1..X_d spanning R^n, presented through
/// its integer relation lattice K = {k in Z^d : sum k_j X_j = 0}.
struct Quasilattice {
    Matrix<FieldScalar> generators;  // n x d, column j = X_j
    Matrix<Int> relations;           // rows form a saturated basis of K
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t q_rank = 0;  // d - rank(K); >= n, with equality iff true lattice

    bool is_lattice() const { return q_rank == n; }
};

inline Quasilattice build_quasilattice(const Matrix<FieldScalar>& generators) {
    Quasilattice Q;
    Q.generators = generators;
    Q.n = generators.rows();
    Q.d = generators.cols();
    if (rank(generators) < Q.n)
        throw GeneratorsDoNotSpan("generators do not span R^n");
    auto rel = rational_kernel(generators);
    Matrix<Rational> relmat(rel.size(), Q.d);
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = 0; j < Q.d; ++j) relmat(i, j) = rel[i][j];
    auto K = saturate_lattice(relmat);
    Q.relations = Matrix<Int>(K.size(), Q.d);
    for (std::size_t i = 0; i < K.size(); ++i)
        for (std::size_t j = 0; j < Q.d; ++j) Q.relations(i, j) = K[i][j];
    Q.q_rank = Q.d - K.size();
    return Q;
}

/// Discrete group attached to a face: invariant factors (>= 2, trivial ones
/// suppressed) and free rank. Finite iff free_rank == 0.
struct IsotropyGroup {
    std::vector<long> invariant_factors;
    std::size_t free_rank = 0;
    std::vector<std::size_t> face;

    bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
    bool finite() const { return free_rank == 0; }
};

namespace detail {

/// Saturated integer basis of S_F = {k in Z^d : sum k_j X_j in span_R{X_i : i in F}}.
inline std::vector<std::vector<Int>> face_relation_lattice(const Quasilattice& Q,
                                                           const std::vector<std::size_t>& F) {
    // Left-annihilator of {X_i : i in F}: rows y with <y, X_i> = 0.
    Matrix<FieldScalar> XF(F.size(), Q.n);
    for (std::size_t r = 0; r < F.size(); ++r)
        for (std::size_t c = 0; c < Q.n; ++c) XF(r, c) = Q.generators(c, F[r]);
    if (rank(XF) < F.size())
        throw DependentFaceNormals("face normals are linearly dependent");
    auto ann = kernel_basis(XF);  // basis of {y : X_F^T y = 0}
    if (ann.empty()) {
        // span is all of R^n; every integer vector qualifies
        std::vector<std::vector<Int>> basis;
        for (std::size_t j = 0; j < Q.d; ++j) {
            std::vector<Int> e(Q.d, 0);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Matrix<FieldScalar> P = Matrix<FieldScalar>::from_rows(ann);
    Matrix<FieldScalar> PM = P * Q.generators;  // condition (P M) k = 0 on rational k
    auto rat = rational_kernel(PM);
    Matrix<Rational> ratmat(rat.size(), Q.d);
    for (std::size_t i = 0; i < rat.size(); ++i)
        for (std::size_t j = 0; j < Q.d; ++j) ratmat(i, j) = rat[i][j];
    return saturate_lattice(ratmat);
}

}  // namespace detail

/// Gamma_F = S_F / (K + Z{e_j : j in F}), presented by expressing the
/// subgroup generators in a basis of S_F and reading off the Smith form.
inline IsotropyGroup isotropy_group(const Quasilattice& Q, const std::vector<std::size_t>& F) {
    auto S = detail::face_relation_lattice(Q, F);
    Matrix<Int> Smat = Matrix<Int>::from_rows(S);
    const std::size_t s = S.size();

    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < Q.relations.rows(); ++i) gens.push_back(Q.relations.row(i));
    for (std::size_t j : F) {
        std::vector<Int> e(Q.d, 0);
        e[j] = 1;
        gens.push_back(std::move(e));
    }

    Matrix<Int> C(gens.size(), s);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto coords = lattice_coordinates(Smat, gens[i]);
        if (!coords)
            throw Error("internal: subgroup generator outside the face relation lattice");
        for (std::size_t j = 0; j < s; ++j) C(i, j) = (*coords)[j];
    }

    SmithForm snf = smith_normal_form(C);
    IsotropyGroup G;
    G.face = F;
    G.free_rank = s - snf.rank;
    for (const Int& f : snf.factors)
        if (f > 1) G.invariant_factors.push_back(f.get_si());
    return G;
}

enum class SpaceClass { Manifold, Orbifold, Quasifold };

inline std::string to_string(SpaceClass c) {
    switch (c) {
        case SpaceClass::Manifold: return "Manifold";
        case SpaceClass::Orbifold: return "Orbifold";
        default: return "Quasifold";
    }
}

/// All faces of a bounded simple polytope, as nonempty subsets of vertex
/// active sets (sorted, deduplicated).
inline std::vector<std::vector<std::size_t>> enumerate_faces(const Polytope& P) {
    std::set<std::vector<std::size_t>> faces;
    for (const Vertex& v : P.vertices()) {
        const auto& A = v.active;
        const std::size_t k = A.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
            std::vector<std::size_t> F;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t(1) << i)) F.push_back(A[i]);
            faces.insert(std::move(F));
        }
    }
    return {faces.begin(), faces.end()};
}

struct Classification {
    SpaceClass space_class;
    std::vector<IsotropyGroup> evidence;  // one entry per face examined
};

inline Classification classify(const Quasilattice& Q,
                               const std::vector<std::vector<std::size_t>>& faces) {
    Classification result;
    result.space_class = SpaceClass::Manifold;
    for (const auto& F : faces) {
        IsotropyGroup G = isotropy_group(Q, F);
        if (G.free_rank > 0)
            result.space_class = SpaceClass::Quasifold;
        else if (!G.trivial() && result.space_class == SpaceClass::Manifold)
            result.space_class = SpaceClass::Orbifold;
        result.evidence.push_back(std::move(G));
    }
    return result;
}

}  // namespace qtoric
