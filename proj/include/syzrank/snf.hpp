#pragma once

#include <cstdlib>
#include <stdexcept>

#include "syzrank/matrix.hpp"

namespace syzrank {

// Product for element types with built-in ring operators (Integer, Rational).
template <typename T>
Mat<T> matmul_exact(const Mat<T>& A, const Mat<T>& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matmul: shape mismatch");
    Mat<T> C(A.rows(), B.cols(), T(0));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (A(i, k) == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

template <typename T>
Mat<T> identity_mat(std::size_t n) {
    Mat<T> I(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) I(i, i) = T(1);
    return I;
}

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithNormalForm {
    Mat<Integer> D, U, V;
    std::vector<Integer> invariant_factors;
};

inline SmithNormalForm smith_normal_form(const Mat<Integer>& A) {
    const std::size_t s = A.rows(), n = A.cols();
    SmithNormalForm out{A, identity_mat<Integer>(s), identity_mat<Integer>(n), {}};
    Mat<Integer>&D = out.D, &U = out.U, &V = out.V;

    auto swap_cols = [&](Mat<Integer>& M, std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t j = 0; j < n; ++j) D(dst, j) -= q * D(src, j);
        for (std::size_t j = 0; j < s; ++j) U(dst, j) -= q * U(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t i = 0; i < s; ++i) D(i, dst) -= q * D(i, src);
        for (std::size_t i = 0; i < n; ++i) V(i, dst) -= q * V(i, src);
    };

    for (std::size_t t = 0; t < std::min(s, n); ++t) {
        for (;;) {
            // move a nonzero entry of minimal absolute value to (t, t)
            std::size_t bi = t, bj = t;
            bool found = false;
            for (std::size_t i = t; i < s; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (D(i, j) == 0) continue;
                    if (!found || cmp(abs(D(i, j)), abs(D(bi, bj))) < 0) {
                        bi = i, bj = j;
                        found = true;
                    }
                }
            if (!found) goto done;
            if (bi != t) {
                D.swap_rows(t, bi);
                U.swap_rows(t, bi);
            }
            if (bj != t) {
                swap_cols(D, t, bj);
                swap_cols(V, t, bj);
            }

            bool dirty = false;
            for (std::size_t i = t + 1; i < s; ++i) {
                if (D(i, t) == 0) continue;
                Integer q = D(i, t) / D(t, t);  // truncated division
                if (q != 0) add_row(i, t, q);
                if (D(i, t) != 0) dirty = true;
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Integer q = D(t, j) / D(t, t);
                if (q != 0) add_col(j, t, q);
                if (D(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // enforce divisibility of the remaining block by D(t, t)
            bool fixed = true;
            for (std::size_t i = t + 1; i < s && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        add_row(t, i, Integer(-1));  // row_t += row_i
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (D(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
            for (std::size_t j = 0; j < s; ++j) U(t, j) = -U(t, j);
        }
    }
done:
    for (std::size_t t = 0; t < std::min(s, n); ++t)
        if (D(t, t) != 0) out.invariant_factors.push_back(D(t, t));
    return out;
}

inline Integer det(const Mat<Integer>& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("det: square matrix required");
    if (A.rows() == 0) return 1;
    Mat<Integer> M = A;
    std::size_t swaps = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < M.cols(); ++c) {
        std::size_t piv = c;
        while (piv < M.rows() && M(piv, c) == 0) ++piv;
        if (piv == M.rows()) return 0;
        if (piv != c) {
            M.swap_rows(c, piv);
            ++swaps;
        }
        for (std::size_t i = c + 1; i < M.rows(); ++i) {
            for (std::size_t j = c + 1; j < M.cols(); ++j) {
                Integer v = M(c, c) * M(i, j) - M(i, c) * M(c, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M(i, j) = v;
            }
            M(i, c) = 0;
        }
        prev = M(c, c);
    }
    Integer d = M(M.rows() - 1, M.cols() - 1);
    return swaps % 2 ? Integer(-d) : d;
}

// Inverse of a matrix with determinant +-1 (stays integral).
inline Mat<Integer> inverse_unimodular(const Mat<Integer>& B) {
    Integer d = det(B);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    const std::size_t n = B.rows();
    Mat<Rational> M(n, 2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = Rational(B(i, j));
        M(i, n + i) = 1;
    }
    RationalField K;
    linalg::echelon_field(K, M);
    Mat<Integer> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = M(i, n + j);
            if (v.get_den() != 1) throw std::logic_error("unimodular inverse not integral");
            inv(i, j) = v.get_num();
        }
    return inv;
}

}  // namespace syzrank
