#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "qtoric/field.hpp"
#include "qtoric/matrix.hpp"

namespace qtoric {

/// Halfspace {mu : <mu, normal> >= offset}.
struct Halfspace {
    std::vector<FieldScalar> normal;
    FieldScalar offset;
};

struct Vertex {
    std::vector<FieldScalar> coords;
    std::vector<std::size_t> active;  // sorted facet indices with equality
};

struct SimplicityReport {
    bool is_simple = false;
    std::vector<std::size_t> offending;  // vertex indices with |active| != n
};

namespace detail {

inline void for_each_subset(std::size_t d, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (k > d) return;
    if (k == 0) {
        f({});
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + d - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace detail

/// H-representation of a convex polytope in R^n: exact halfspace data, and
/// after build() the full vertex list with active sets.
class Polytope {
public:
    Polytope(std::size_t n, std::vector<Halfspace> facets)
        : n_(n), facets_(std::move(facets)) {}

    std::size_t dim() const { return n_; }
    std::size_t facet_count() const { return facets_.size(); }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    bool built() const { return built_; }

    /// Generator matrix: column j is the normal X_j (n x d).
    Matrix<FieldScalar> generator_matrix() const {
        Matrix<FieldScalar> M(n_, facets_.size());
        for (std::size_t j = 0; j < facets_.size(); ++j)
            for (std::size_t i = 0; i < n_; ++i) M(i, j) = facets_[j].normal[i];
        return M;
    }

    FieldScalar eval(std::size_t j, const std::vector<FieldScalar>& mu) const {
        FieldScalar s;
        for (std::size_t i = 0; i < n_; ++i) s += facets_[j].normal[i] * mu[i];
        return s;
    }

    /// Brute-force vertex enumeration over all n-subsets of facets.
    /// Throws Unbounded / EmptyPolytope / LowerDimensional on degenerate input.
    void build() {
        const std::size_t d = facets_.size();
        Matrix<FieldScalar> G = generator_matrix();
        if (rank(G) < n_) throw Unbounded("facet normals do not span R^n");
        check_recession_cone();

        vertices_.clear();
        detail::for_each_subset(d, n_, [&](const std::vector<std::size_t>& idx) {
            Matrix<FieldScalar> A(n_, n_);
            std::vector<FieldScalar> b(n_);
            for (std::size_t r = 0; r < n_; ++r) {
                for (std::size_t c = 0; c < n_; ++c) A(r, c) = facets_[idx[r]].normal[c];
                b[r] = facets_[idx[r]].offset;
            }
            auto mu = solve(A, b);
            if (!mu) return;
            for (std::size_t j = 0; j < d; ++j)
                if (eval(j, *mu) < facets_[j].offset) return;
            for (const Vertex& v : vertices_)
                if (v.coords == *mu) return;
            Vertex v;
            v.coords = *mu;
            for (std::size_t j = 0; j < d; ++j)
                if (eval(j, *mu) == facets_[j].offset) v.active.push_back(j);
            vertices_.push_back(std::move(v));
        });

        if (vertices_.empty()) throw EmptyPolytope("polytope has no vertices");
        check_full_dimensional();
        std::sort(vertices_.begin(), vertices_.end(),
                  [](const Vertex& a, const Vertex& b) { return a.active < b.active; });
        built_ = true;
    }

    SimplicityReport check_simple() const {
        SimplicityReport rep;
        rep.is_simple = true;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i].active.size() != n_) {
                rep.is_simple = false;
                rep.offending.push_back(i);
            }
        return rep;
    }

    bool contains(const std::vector<FieldScalar>& mu) const {
        for (std::size_t j = 0; j < facets_.size(); ++j)
            if (eval(j, mu) < facets_[j].offset) return false;
        return true;
    }

    bool contains(const std::vector<double>& mu, double eps) const {
        for (std::size_t j = 0; j < facets_.size(); ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n_; ++i) s += facets_[j].normal[i].to_double() * mu[i];
            if (s < facets_[j].offset.to_double() - eps) return false;
        }
        return true;
    }

    /// Componentwise [min, max] over the float embedding of the vertices.
    std::vector<std::pair<double, double>> bounding_box() const {
        std::vector<std::pair<double, double>> box(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            double lo = vertices_[0].coords[i].to_double(), hi = lo;
            for (const Vertex& v : vertices_) {
                double x = v.coords[i].to_double();
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
            box[i] = {lo, hi};
        }
        return box;
    }

    /// Exact componentwise extent over the vertices.
    std::vector<std::pair<FieldScalar, FieldScalar>> exact_extent() const {
        std::vector<std::pair<FieldScalar, FieldScalar>> ext(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            FieldScalar lo = vertices_[0].coords[i], hi = lo;
            for (const Vertex& v : vertices_) {
                if (v.coords[i] < lo) lo = v.coords[i];
                if (v.coords[i] > hi) hi = v.coords[i];
            }
            ext[i] = {lo, hi};
        }
        return ext;
    }

private:
    // The recession cone {v : <X_j, v> >= 0 for all j} must be {0}. Since the
    // normals span R^n the cone is pointed, so a nonzero cone would contain an
    // extreme ray cut out by n-1 independent active constraints.
    void check_recession_cone() const {
        const std::size_t d = facets_.size();
        Matrix<FieldScalar> G = generator_matrix();
        bool unbounded = false;
        detail::for_each_subset(d, n_ - 1, [&](const std::vector<std::size_t>& idx) {
            if (unbounded) return;
            Matrix<FieldScalar> A(n_ - 1, n_);
            for (std::size_t r = 0; r + 1 < n_; ++r)
                for (std::size_t c = 0; c < n_; ++c) A(r, c) = facets_[idx[r]].normal[c];
            auto ker = kernel_basis(A);
            if (ker.size() != 1) return;  // not a candidate ray direction
            for (int sgn : {+1, -1}) {
                bool feasible = true;
                for (std::size_t j = 0; j < d && feasible; ++j) {
                    FieldScalar s;
                    for (std::size_t i = 0; i < n_; ++i) s += facets_[j].normal[i] * ker[0][i];
                    if (sgn < 0) s = -s;
                    if (s.sign() < 0) feasible = false;
                }
                if (feasible) unbounded = true;
            }
        });
        if (unbounded) throw Unbounded("recession cone contains a nonzero ray");
    }

    void check_full_dimensional() const {
        if (vertices_.size() < n_ + 1)
            throw LowerDimensional("vertices span a proper affine subspace");
        Matrix<FieldScalar> D(vertices_.size() - 1, n_);
        for (std::size_t i = 1; i < vertices_.size(); ++i)
            for (std::size_t c = 0; c < n_; ++c)
                D(i - 1, c) = vertices_[i].coords[c] - vertices_[0].coords[c];
        if (rank(D) < n_)
            throw LowerDimensional("vertices span a proper affine subspace");
    }

    std::size_t n_;
    std::vector<Halfspace> facets_;
    std::vector<Vertex> vertices_;
    bool built_ = false;
};

}  // namespace qtoric
