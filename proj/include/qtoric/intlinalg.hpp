#pragma once

#include <cstddef>
#include <vector>

#include "qtoric/field.hpp"
#include "qtoric/matrix.hpp"

namespace qtoric {

struct SmithForm {
    std::vector<Int> factors;  // d_1 | d_2 | ... | d_r, all positive
    std::size_t rank = 0;
    Matrix<Int> U;  // unimodular, U*A*V = diag(factors)
    Matrix<Int> V;  // unimodular
};

/// Smith normal form by pivoting on the smallest nonzero entry.
/// Arbitrary-precision entries, so no growth mitigation is needed at desk scale.
inline SmithForm smith_normal_form(Matrix<Int> A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithForm S;
    S.U = Matrix<Int>::identity(m);
    S.V = Matrix<Int>::identity(n);

    auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        // row dst -= q * row src
        for (std::size_t j = 0; j < n; ++j) A(dst, j) -= q * A(src, j);
        for (std::size_t j = 0; j < m; ++j) S.U(dst, j) -= q * S.U(src, j);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < m; ++i) A(i, dst) -= q * A(i, src);
        for (std::size_t i = 0; i < n; ++i) S.V(i, dst) -= q * S.V(i, src);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // locate smallest nonzero entry in the trailing submatrix
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (A(i, j) == 0) continue;
                Int a = abs(A(i, j));
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) {
            A.swap_rows(t, pi);
            S.U.swap_rows(t, pi);
        }
        if (pj != t) {
            A.swap_cols(t, pj);
            S.V.swap_cols(t, pj);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (A(i, t) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
            row_op(i, t, q);
            if (A(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (A(t, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
            col_op(j, t, q);
            if (A(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; re-pivot

        // enforce d_t | every remaining entry
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n && !fixed; ++j)
                if (A(i, j) % A(t, t) != 0) {
                    row_op(t, i, Int(-1));  // row t += row i
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }

    S.rank = t;
    for (std::size_t i = 0; i < t; ++i) {
        if (A(i, i) < 0) {
            for (std::size_t j = 0; j < n; ++j) S.V(j, i) = -S.V(j, i);
            A(i, i) = -A(i, i);
        }
        S.factors.push_back(A(i, i));
    }
    return S;
}

/// Basis of {x in Z^n : A x = 0}, returned as rows. The basis generates the
/// full integer kernel (it is saturated by construction: x = V y with V
/// unimodular, so integral x correspond exactly to integral y).
inline std::vector<std::vector<Int>> integer_kernel(const Matrix<Int>& A) {
    const std::size_t n = A.cols();
    SmithForm S = smith_normal_form(A);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = S.rank; j < n; ++j) basis.push_back(S.V.col(j));
    return basis;
}

/// Scale each row to integer entries with content 1.
inline Matrix<Int> clear_denominators(const Matrix<Rational>& B) {
    Matrix<Int> A(B.rows(), B.cols());
    for (std::size_t i = 0; i < B.rows(); ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < B.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), B(i, j).get_den().get_mpz_t());
        Int gcd = 0;
        for (std::size_t j = 0; j < B.cols(); ++j) {
            Rational scaled = B(i, j) * lcm;
            A(i, j) = scaled.get_num();
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), A(i, j).get_mpz_t());
        }
        if (gcd > 1)
            for (std::size_t j = 0; j < B.cols(); ++j) A(i, j) /= gcd;
    }
    return A;
}

/// Integer basis of span_Q(rows of B) ∩ Z^d: the orthogonal complement of the
/// orthogonal complement, taken over Z. Full-space input yields the standard basis.
inline std::vector<std::vector<Int>> saturate_lattice(const Matrix<Rational>& B) {
    const std::size_t d = B.cols();
    std::vector<std::vector<Rational>> perp = kernel_basis(B);
    if (perp.empty()) {
        std::vector<std::vector<Int>> basis;
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Int> e(d, 0);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Matrix<Int> N = clear_denominators(Matrix<Rational>::from_rows(perp));
    return integer_kernel(N);
}

/// Kernel of a Q(sqrt(m)) matrix restricted to RATIONAL vectors: split every
/// equation into its rational and sqrt(m) components and solve over Q.
inline std::vector<std::vector<Rational>> rational_kernel(const Matrix<FieldScalar>& M) {
    Matrix<Rational> R(2 * M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            R(2 * i, j) = M(i, j).rat_part();
            R(2 * i + 1, j) = M(i, j).irr_part();
        }
    return kernel_basis(std::move(R));
}

/// Coordinates of v in the lattice spanned by the rows of B, if v lies in it.
inline std::optional<std::vector<Int>> lattice_coordinates(const Matrix<Int>& B,
                                                           const std::vector<Int>& v) {
    Matrix<Rational> Bt(B.cols(), B.rows());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) Bt(j, i) = Rational(B(i, j));
    std::vector<Rational> rhs(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) rhs[j] = Rational(v[j]);
    auto c = solve(Bt, rhs);
    if (!c) return std::nullopt;
    std::vector<Int> out(c->size());
    for (std::size_t i = 0; i < c->size(); ++i) {
        if ((*c)[i].get_den() != 1) return std::nullopt;
        out[i] = (*c)[i].get_num();
    }
    return out;
}

}  // namespace qtoric
