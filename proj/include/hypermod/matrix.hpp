#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace hypermod {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over GF(2^k).
class Matrix {
   public:
    Matrix(Field f, std::size_t rows, std::size_t cols) : f_(std::move(f)), r_(rows), c_(cols), a_(rows * cols, 0) {}

    Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
        : f_(std::move(f)), r_(rows), c_(cols), a_(std::move(entries)) {
        if (a_.size() != r_ * c_) fail(ErrorCode::DimensionMismatch, "entry count != rows*cols");
        for (auto x : a_)
            if (!f_.contains(x)) fail(ErrorCode::InvalidArgument, "entry outside " + f_.name());
    }

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "row length mismatch");
            std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
        }
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    const std::vector<Elem>& entries() const { return a_; }

    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::span<Elem> row(std::size_t i) { return {a_.data() + i * c_, c_}; }
    std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * c_, c_}; }
    Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }
    std::vector<Vec> row_list() const {
        std::vector<Vec> out;
        out.reserve(r_);
        for (std::size_t i = 0; i < r_; ++i) out.push_back(row_vec(i));
        return out;
    }

    bool is_zero() const {
        for (auto x : a_)
            if (x) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(f_, c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix scaled(Elem s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x = f_.mul(x, s);
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) fail(ErrorCode::DimensionMismatch, "matrix sum shape");
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] ^= b.a_[i];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
        Matrix m(a.f_, a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i) {
            auto out = m.row(i);
            for (std::size_t k = 0; k < a.c_; ++k) {
                const Elem s = a(i, k);
                if (s == 0) continue;
                auto br = b.row(k);
                for (std::size_t j = 0; j < b.c_; ++j) out[j] ^= a.f_.mul(s, br[j]);
            }
        }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.f_ == b.f_ && a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < r_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < c_; ++j) s += (j ? " " : "") + std::to_string((*this)(i, j));
            s += "]\n";
        }
        return s;
    }

   private:
    Field f_;
    std::size_t r_, c_;
    std::vector<Elem> a_;
};

/// v * M for a row vector v.
inline Vec mul_vec(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "vector-matrix shape");
    const Field& f = m.field();
    Vec out(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        auto r = m.row(k);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] ^= f.mul(v[k], r[j]);
    }
    return out;
}

/// dst += s * src
inline void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem s) {
    if (s == 0) return;
    for (std::size_t j = 0; j < dst.size(); ++j)
        if (src[j]) dst[j] ^= f.mul(s, src[j]);
}

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) fail(ErrorCode::MismatchedContext, "block_diag over different fields");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) fail(ErrorCode::MismatchedContext, "kron over different fields");
    const Field& f = a.field();
    Matrix m(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Elem s = a(i, j);
            if (s == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
        }
    return m;
}

}  // namespace hypermod
