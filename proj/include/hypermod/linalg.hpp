/**
 * @file linalg.hpp
 * @brief Exact linear algebra over GF(2^k): echelon forms, kernels,
 *        characteristic polynomials, and the intertwiner solver shared by the
 *        module and form code.
 *
 * Echelon forms are fully reduced with pivots taken left to right, so every
 * basis returned here is byte-deterministic for a given input.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace hypermod {

/// Incrementally built subspace of F^n kept in semi-echelon form.
class Subspace {
   public:
    Subspace(Field f, std::size_t n) : f_(std::move(f)), n_(n) {}

    const Field& field() const { return f_; }
    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    bool full() const { return rows_.size() == n_; }
    const std::vector<Vec>& rows() const { return rows_; }

    /// v minus its projection onto this subspace along the pivot coordinates.
    Vec reduce(Vec v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem c = v[piv_[i]];
            if (c) axpy(f_, v, rows_[i], c);
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    /// Adds v; returns the reduced, normalized new row if v was independent.
    std::optional<Vec> add(const Vec& v) {
        if (v.size() != n_) fail(ErrorCode::DimensionMismatch, "subspace vector length");
        Vec r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p] == 0) ++p;
        if (p == n_) return std::nullopt;
        const Elem inv = f_.inv(r[p]);
        for (auto& x : r) x = f_.mul(x, inv);
        rows_.push_back(r);
        piv_.push_back(p);
        return r;
    }

    static bool is_zero(const Vec& v) {
        for (auto x : v)
            if (x) return false;
        return true;
    }

    /// Basis as a fully reduced row echelon matrix.
    Matrix basis() const;

   private:
    Field f_;
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> piv_;
};

struct Echelon {
    Matrix rref;                      // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Fully reduced row echelon form; zero rows dropped.
inline Echelon row_echelon(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Elem inv = f.inv(a(r, c));
        for (auto& x : a.row(r)) x = f.mul(x, inv);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a(i, c)) axpy(f, a.row(i), a.row(r), a(i, c));
        piv.push_back(c);
        ++r;
    }
    std::vector<Elem> e(a.entries().begin(), a.entries().begin() + static_cast<std::ptrdiff_t>(r * a.cols()));
    return {Matrix(f, r, a.cols(), std::move(e)), std::move(piv)};
}

inline Matrix Subspace::basis() const { return row_echelon(Matrix::from_rows(f_, n_, rows_)).rref; }

inline std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

/// Right kernel {v : M v = 0}; rows of the result form a reduced echelon basis.
inline Matrix kernel(const Matrix& m) {
    const Field& f = m.field();
    const Echelon e = row_echelon(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_piv[fc]) continue;
        Vec v(m.cols(), 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = e.rref(i, fc);  // -x = x in char 2
        basis.push_back(std::move(v));
    }
    return row_echelon(Matrix::from_rows(f, m.cols(), basis)).rref;
}

/// Left kernel {v : v M = 0}.
inline Matrix left_kernel(const Matrix& m) { return kernel(m.transpose()); }

inline std::optional<Matrix> try_inverse(const Matrix& m) {
    if (!m.is_square()) fail(ErrorCode::NonSquareMatrix, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    const Field& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = row_echelon(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

inline Matrix inverse(const Matrix& m) {
    auto r = try_inverse(m);
    if (!r) fail(ErrorCode::DivisionByZero, "matrix is singular");
    return *r;
}

inline bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

/// det(xI - M), via similarity reduction to upper Hessenberg form.
inline Poly char_poly(const Matrix& m) {
    if (!m.is_square()) fail(ErrorCode::NonSquareMatrix, "char_poly of non-square matrix");
    const Field& f = m.field();
    const std::size_t n = m.rows();
    Matrix h = m;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t i = j + 1;
        while (i < n && h(i, j) == 0) ++i;
        if (i == n) continue;
        if (i != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
        }
        const Elem inv = f.inv(h(j + 1, j));
        for (std::size_t r = j + 2; r < n; ++r) {
            const Elem u = f.mul(h(r, j), inv);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c) h(r, c) ^= f.mul(u, h(j + 1, c));
            for (std::size_t rr = 0; rr < n; ++rr) h(rr, j + 1) ^= f.mul(u, h(rr, r));
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i (prod of subdiagonal) h_{m-i,m} p_{m-i-1}
    std::vector<Poly> p;
    p.reserve(n + 1);
    p.push_back(Poly::constant(f, 1));
    for (std::size_t m1 = 1; m1 <= n; ++m1) {
        Poly cur = Poly::linear(f, h(m1 - 1, m1 - 1)) * p[m1 - 1];
        Elem t = 1;
        for (std::size_t i = 1; i < m1; ++i) {
            t = f.mul(t, h(m1 - i, m1 - i - 1));
            if (t == 0) break;
            const Elem s = f.mul(t, h(m1 - i - 1, m1 - 1));
            if (s) cur = cur + p[m1 - i - 1].scaled(s);
        }
        p.push_back(std::move(cur));
    }
    return p[n];
}

struct SquareTest {
    bool square = false;
    std::optional<Poly> witness;  // g with g^2 = c, when square
};

inline SquareTest is_square_poly(const Poly& c) {
    auto g = square_root(c);
    return {g.has_value(), std::move(g)};
}

/// p(A) for square A.
inline Matrix eval_poly(const Poly& p, const Matrix& a) {
    if (!a.is_square()) fail(ErrorCode::NonSquareMatrix, "eval_poly on non-square matrix");
    const Field& f = a.field();
    Matrix r(f, a.rows(), a.cols());
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        r = r * a;
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) ^= *it;
    }
    return r;
}

/// Basis of {X (m x n) : A_i X = X B_i for all i}. Each A_i is m x m and each
/// B_i is n x n. With no constraints the whole matrix space is returned.
inline std::vector<Matrix> solve_sylvester_like(const Field& f, std::size_t m, std::size_t n,
                                                const std::vector<std::pair<Matrix, Matrix>>& constraints) {
    for (const auto& [a, b] : constraints)
        if (a.rows() != m || a.cols() != m || b.rows() != n || b.cols() != n)
            fail(ErrorCode::DimensionMismatch, "sylvester constraint shapes do not match X");
    const std::size_t unknowns = m * n;
    Subspace eqs(f, unknowns);
    Vec row(unknowns);
    for (const auto& [a, b] : constraints) {
        for (std::size_t r = 0; r < m && !eqs.full(); ++r)
            for (std::size_t c = 0; c < n && !eqs.full(); ++c) {
                std::fill(row.begin(), row.end(), 0);
                // (A X)[r][c] = sum_k A[r][k] X[k][c];  (X B)[r][c] = sum_k X[r][k] B[k][c]
                for (std::size_t k = 0; k < m; ++k) row[k * n + c] ^= a(r, k);
                for (std::size_t k = 0; k < n; ++k) row[r * n + k] ^= b(k, c);
                eqs.add(row);
            }
    }
    const Matrix sys = eqs.dim() ? Matrix::from_rows(f, unknowns, eqs.rows()) : Matrix(f, 0, unknowns);
    const Matrix ker = kernel(sys);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < ker.rows(); ++i) out.push_back(Matrix(f, m, n, ker.row_vec(i)));
    return out;
}

/// Linear combination sum c_i M_i.
inline Matrix combine(const Field& f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& ms,
                      const std::vector<Elem>& coeffs) {
    Matrix r(f, rows, cols);
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (coeffs[i]) r = r + ms[i].scaled(coeffs[i]);
    return r;
}

}  // namespace hypermod
