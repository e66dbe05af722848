#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "syzrank/field.hpp"

namespace syzrank {

template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool operator==(const Mat& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

namespace linalg {

// Fraction-free (Bareiss) row echelon reduction of an integer matrix.
// Returns the pivot (row, col) pairs; the matrix is modified in place and
// stays integral throughout.
inline std::vector<std::pair<std::size_t, std::size_t>> echelon_bareiss(Mat<Integer>& M) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t piv = r;
        while (piv < M.rows() && M(piv, c) == 0) ++piv;
        if (piv == M.rows()) continue;
        M.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < M.rows(); ++i) {
            for (std::size_t j = c + 1; j < M.cols(); ++j) {
                Integer v = M(r, c) * M(i, j) - M(i, c) * M(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M(i, j) = v;
            }
            M(i, c) = 0;
        }
        prev = M(r, c);
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

// Clears denominators row by row: the result has the same row space.
template <typename F>
Mat<Integer> integerize_rows(const F& K, const Mat<typename F::Element>& A) {
    static_assert(std::is_same_v<F, RationalField>);
    (void)K;
    Mat<Integer> M(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < A.cols(); ++j) l = lcm(l, A(i, j).get_den());
        for (std::size_t j = 0; j < A.cols(); ++j) {
            Rational v = A(i, j) * Rational(l);
            M(i, j) = v.get_num();
        }
    }
    return M;
}

// Row echelon over an arbitrary field (in place); returns pivot pairs.
template <typename F>
std::vector<std::pair<std::size_t, std::size_t>> echelon_field(const F& K,
                                                               Mat<typename F::Element>& M) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t piv = r;
        while (piv < M.rows() && K.is_zero(M(piv, c))) ++piv;
        if (piv == M.rows()) continue;
        M.swap_rows(r, piv);
        auto inv = K.inv(M(r, c));
        for (std::size_t j = c; j < M.cols(); ++j) M(r, j) = K.mul(M(r, j), inv);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || K.is_zero(M(i, c))) continue;
            auto f = M(i, c);
            for (std::size_t j = c; j < M.cols(); ++j)
                M(i, j) = K.sub(M(i, j), K.mul(f, M(r, j)));
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace linalg

template <typename F>
std::size_t rank(const F& K, const Mat<typename F::Element>& A) {
    if (A.rows() == 0 || A.cols() == 0) return 0;
    if constexpr (std::is_same_v<F, RationalField>) {
        Mat<Integer> M = linalg::integerize_rows(K, A);
        return linalg::echelon_bareiss(M).size();
    } else {
        Mat<typename F::Element> M = A;
        return linalg::echelon_field(K, M).size();
    }
}

// Basis of { v : A v = 0 }, deterministic: one vector per free column in
// ascending column order; over Q each vector is scaled to a primitive
// integer vector whose first nonzero entry is positive.
template <typename F>
std::vector<std::vector<typename F::Element>> nullspace(const F& K,
                                                        const Mat<typename F::Element>& A) {
    using Elt = typename F::Element;
    const std::size_t n = A.cols();
    std::vector<std::vector<Elt>> basis;
    if (n == 0) return basis;

    Mat<Elt> M = A;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if constexpr (std::is_same_v<F, RationalField>) {
        Mat<Integer> Z = linalg::integerize_rows(K, A);
        pivots = linalg::echelon_bareiss(Z);
        // convert the fraction-free echelon form back to Q and finish with
        // a reduced echelon pass (cheap: already triangular)
        Mat<Elt> E(Z.rows(), Z.cols());
        for (std::size_t i = 0; i < Z.rows(); ++i)
            for (std::size_t j = 0; j < Z.cols(); ++j) E(i, j) = Rational(Z(i, j));
        M = std::move(E);
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            auto [r, c] = *it;
            auto inv = K.inv(M(r, c));
            for (std::size_t j = c; j < n; ++j) M(r, j) = K.mul(M(r, j), inv);
            for (std::size_t i = 0; i < r; ++i) {
                if (K.is_zero(M(i, c))) continue;
                auto f = M(i, c);
                for (std::size_t j = c; j < n; ++j) M(i, j) = K.sub(M(i, j), K.mul(f, M(r, j)));
            }
        }
    } else {
        pivots = linalg::echelon_field(K, M);
    }

    std::vector<bool> is_pivot(n, false);
    for (auto [r, c] : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Elt> v(n, K.zero());
        v[f] = K.one();
        for (auto [r, c] : pivots) v[c] = K.neg(M(r, f));
        if constexpr (std::is_same_v<F, RationalField>) {
            Integer den = 1, num = 0;
            for (const auto& e : v) den = lcm(den, e.get_den());
            for (auto& e : v) {
                e *= Rational(den);
                num = gcd(num, e.get_num());
            }
            if (num > 1)
                for (auto& e : v) e /= Rational(num);
            for (const auto& e : v) {
                if (e == 0) continue;
                if (e < 0)
                    for (auto& w : v) w = -w;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis of { w : w^T A = 0 }.
template <typename F>
std::vector<std::vector<typename F::Element>> left_kernel(const F& K,
                                                          const Mat<typename F::Element>& A) {
    return nullspace(K, A.transposed());
}

}  // namespace syzrank
