#pragma once
// Dense row-major matrices over a ring T (LaurentPoly or BigInt).

#include "novikov/errors.hpp"
#include "novikov/laurent.hpp"

#include <vector>

namespace nov {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        for (const auto& r : init) {
            if (int(r.size()) != cols_) throw ShapeMismatch("ragged matrix literal");
            for (const auto& v : r) a_.push_back(v);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == T(0))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        if (o.rows_ != rows_ || o.cols_ != cols_) throw ShapeMismatch("matrix add");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        if (o.rows_ != rows_ || o.cols_ != cols_) throw ShapeMismatch("matrix sub");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (!(b(k, j) == T(0))) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = s * a_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix without_row(int r) const {
        Matrix m(rows_ - 1, cols_);
        for (int i = 0, k = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (int j = 0; j < cols_; ++j) m(k, j) = (*this)(i, j);
            ++k;
        }
        return m;
    }
    Matrix without_col(int c) const {
        Matrix m(rows_, cols_ - 1);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0, k = 0; j < cols_; ++j) {
                if (j == c) continue;
                m(i, k++) = (*this)(i, j);
            }
        return m;
    }

    // copy b into this at (r0, c0)
    void put(int r0, int c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block placement");
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
    Matrix block(int r0, int c0, int nr, int nc) const {
        Matrix m(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    template <class F>
    auto map(F f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using PolyMat = Matrix<LaurentPoly>;
using IntMat = Matrix<BigInt>;

// block matrix from a grid of blocks; row heights / col widths taken from
// the supplied sizes so empty blocks may be default-constructed
template <class T>
Matrix<T> block_matrix(const std::vector<int>& heights, const std::vector<int>& widths,
                       const std::vector<std::vector<Matrix<T>>>& blocks) {
    int R = 0, C = 0;
    for (int h : heights) R += h;
    for (int w : widths) C += w;
    Matrix<T> m(R, C);
    int r0 = 0;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        int c0 = 0;
        for (std::size_t j = 0; j < widths.size(); ++j) {
            const auto& b = blocks[i][j];
            if (b.rows() == heights[i] && b.cols() == widths[j])
                m.put(r0, c0, b);
            else if (b.rows() != 0 || b.cols() != 0)
                throw ShapeMismatch("block size");
            c0 += widths[j];
        }
        r0 += heights[i];
    }
    return m;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.put(0, 0, a);
    m.put(a.rows(), a.cols(), b);
    return m;
}

inline PolyMat to_poly(const IntMat& m) {
    return m.map([](const BigInt& v) { return LaurentPoly(v); });
}

}  // namespace nov
