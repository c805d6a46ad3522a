#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace twinwalk {

using Complex = std::complex<double>;

/// Dense square matrix, row-major. Dimensions stay at desk scale (n <= 64),
/// so products are plain triple loops.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < n_ && j < n_);
        return data_[i * n_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < n_ && j < n_);
        return data_[i * n_ + j];
    }

    Matrix& operator+=(const Matrix& o) {
        assert(o.n_ == n_);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        assert(o.n_ == n_);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(T s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, T s) { return a *= s; }
    friend Matrix operator*(T s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.n_ == b.n_);
        const std::size_t n = a.n_;
        Matrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = m(i, j);
    return r;
}

template <class T>
double max_abs(const Matrix<T>& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) best = std::max(best, std::abs(m(i, j)));
    return best;
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.size() == b.size());
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) best = std::max(best, std::abs(a(i, j) - b(i, j)));
    return best;
}

/// max |U U^dagger - I|.
inline double unitarity_defect(const ComplexMatrix& u) {
    return max_abs_diff(u * adjoint(u), ComplexMatrix::identity(u.size()));
}

/// Real symmetric matrix storing only the lower triangle, so symmetry holds
/// by construction.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n) : n_(n), packed_(n * (n + 1) / 2, 0.0) {}

    static SymmetricMatrix identity(std::size_t n) {
        SymmetricMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return packed_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, double v) { packed_[index(i, j)] = v; }
    void add(std::size_t i, std::size_t j, double v) { packed_[index(i, j)] += v; }

    SymmetricMatrix& operator+=(const SymmetricMatrix& o) {
        assert(o.n_ == n_);
        for (std::size_t k = 0; k < packed_.size(); ++k) packed_[k] += o.packed_[k];
        return *this;
    }
    SymmetricMatrix& operator*=(double s) {
        for (auto& x : packed_) x *= s;
        return *this;
    }
    friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
    friend SymmetricMatrix operator*(double s, SymmetricMatrix a) { return a *= s; }

    RealMatrix dense() const {
        RealMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
        return std::sqrt(s);
    }

    bool operator==(const SymmetricMatrix&) const = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        assert(i < n_ && j < n_);
        if (i < j) std::swap(i, j);
        return i * (i + 1) / 2 + j;
    }

    std::size_t n_ = 0;
    std::vector<double> packed_;
};

inline RealMatrix operator*(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.dense() * b.dense();
}

}  // namespace twinwalk
