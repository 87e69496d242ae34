#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bisetring {

// Dense matrix over an exact scalar type. Shape is fixed at construction.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <class R>
Matrix<typename R::Elt> mat_zero(const R& ring, std::size_t rows, std::size_t cols) {
    return Matrix<typename R::Elt>(rows, cols, ring.zero());
}

template <class R>
Matrix<typename R::Elt> mat_identity(const R& ring, std::size_t n) {
    auto m = mat_zero(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

template <class R>
Matrix<typename R::Elt> mat_add(const R& ring, const Matrix<typename R::Elt>& a,
                                const Matrix<typename R::Elt>& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    auto r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ring.add(a(i, j), b(i, j));
    return r;
}

template <class R>
Matrix<typename R::Elt> mat_sub(const R& ring, const Matrix<typename R::Elt>& a,
                                const Matrix<typename R::Elt>& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    auto r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ring.sub(a(i, j), b(i, j));
    return r;
}

template <class R>
Matrix<typename R::Elt> mat_scale(const R& ring, const typename R::Elt& c,
                                  const Matrix<typename R::Elt>& a) {
    auto r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ring.mul(c, a(i, j));
    return r;
}

template <class R>
Matrix<typename R::Elt> mat_mul(const R& ring, const Matrix<typename R::Elt>& a,
                                const Matrix<typename R::Elt>& b) {
    assert(a.cols() == b.rows());
    auto r = mat_zero(ring, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (ring.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) = ring.add(r(i, j), ring.mul(a(i, k), b(k, j)));
        }
    return r;
}

template <class R>
Matrix<typename R::Elt> mat_pow(const R& ring, Matrix<typename R::Elt> a, std::uint64_t e) {
    assert(a.rows() == a.cols());
    auto r = mat_identity(ring, a.rows());
    while (e) {
        if (e & 1) r = mat_mul(ring, r, a);
        a = mat_mul(ring, a, a);
        e >>= 1;
    }
    return r;
}

template <class R>
typename R::Elt mat_trace(const R& ring, const Matrix<typename R::Elt>& a) {
    assert(a.rows() == a.cols());
    auto t = ring.zero();
    for (std::size_t i = 0; i < a.rows(); ++i) t = ring.add(t, a(i, i));
    return t;
}

template <class T>
Matrix<T> mat_transpose(const Matrix<T>& a) {
    Matrix<T> r(a.cols(), a.rows(), a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

// Gaussian elimination over a field; returns rank, destroys its copy.
template <class F>
std::size_t mat_rank(const F& field, Matrix<typename F::Elt> a) {
    static_assert(F::is_field);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && field.is_zero(a(piv, col))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != rank)
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(piv, j), a(rank, j));
        auto d = field.inv(a(rank, col));
        for (std::size_t j = col; j < a.cols(); ++j) a(rank, j) = field.mul(a(rank, j), d);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || field.is_zero(a(i, col))) continue;
            auto f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) = field.sub(a(i, j), field.mul(f, a(rank, j)));
        }
        ++rank;
    }
    return rank;
}

template <class F>
typename F::Elt mat_det_gauss(const F& field, Matrix<typename F::Elt> a) {
    static_assert(F::is_field);
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    auto det = field.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && field.is_zero(a(piv, col))) ++piv;
        if (piv == n) return field.zero();
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = field.neg(det);
        }
        det = field.mul(det, a(col, col));
        auto d = field.inv(a(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (field.is_zero(a(i, col))) continue;
            auto f = field.mul(a(i, col), d);
            for (std::size_t j = col; j < n; ++j)
                a(i, j) = field.sub(a(i, j), field.mul(f, a(col, j)));
        }
    }
    return det;
}

// Fraction-free determinant (Bareiss); exact over any integral domain whose
// descriptor supplies divexact.
template <class R>
typename R::Elt mat_det_bareiss(const R& ring, Matrix<typename R::Elt> a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    if (n == 0) return ring.one();
    auto denom = ring.one();
    bool negate = false;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t piv = col;
        while (piv < n && ring.is_zero(a(piv, col))) ++piv;
        if (piv == n) return ring.zero();
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
            negate = !negate;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                auto t = ring.sub(ring.mul(a(i, j), a(col, col)),
                                  ring.mul(a(i, col), a(col, j)));
                a(i, j) = ring.divexact(t, denom);
            }
            a(i, col) = ring.zero();
        }
        denom = a(col, col);
    }
    auto det = a(n - 1, n - 1);
    return negate ? ring.neg(det) : det;
}

// Characteristic polynomial of det(tI - a) by the Berkowitz method:
// division-free, so it is valid over any commutative ring. Coefficients are
// returned highest degree first; the result is monic of length n+1.
template <class R>
std::vector<typename R::Elt> char_poly(const R& ring, const Matrix<typename R::Elt>& a) {
    using Elt = typename R::Elt;
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    std::vector<Elt> vec{ring.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        // principal k x k block, split off its last row and column
        std::vector<Elt> toep(k + 1, ring.zero());
        toep[0] = ring.one();
        toep[1] = ring.neg(a(k - 1, k - 1));
        if (k >= 2) {
            std::vector<Elt> col(k - 1, ring.zero());  // iterated M^j * C
            for (std::size_t i = 0; i < k - 1; ++i) col[i] = a(i, k - 1);
            for (std::size_t j = 2; j <= k; ++j) {
                auto dot = ring.zero();
                for (std::size_t i = 0; i < k - 1; ++i)
                    dot = ring.add(dot, ring.mul(a(k - 1, i), col[i]));
                toep[j] = ring.neg(dot);
                if (j < k) {
                    std::vector<Elt> next(k - 1, ring.zero());
                    for (std::size_t i = 0; i < k - 1; ++i)
                        for (std::size_t l = 0; l < k - 1; ++l)
                            next[i] = ring.add(next[i], ring.mul(a(i, l), col[l]));
                    col = std::move(next);
                }
            }
        }
        std::vector<Elt> out(k + 1, ring.zero());
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= i && j < vec.size() + 1; ++j) {
                if (i - j >= vec.size()) continue;
                out[i] = ring.add(out[i], ring.mul(toep[j], vec[i - j]));
            }
        vec = std::move(out);
    }
    return vec;
}

// RREF-based row space over a field; canonical, so equality of spans is
// equality of the reduced bases.
template <class F>
class RowSpace {
public:
    using Elt = typename F::Elt;

    RowSpace(const F& field, std::size_t width) : field_(field), width_(width) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    // returns true if the vector enlarged the span
    bool insert(std::vector<Elt> v) {
        reduce(v);
        std::size_t p = pivot_of(v);
        if (p == width_) return false;
        auto d = field_.inv(v[p]);
        for (auto& x : v) x = field_.mul(x, d);
        // back-substitute into existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (field_.is_zero(rows_[r][p])) continue;
            auto f = rows_[r][p];
            for (std::size_t j = 0; j < width_; ++j)
                rows_[r][j] = field_.sub(rows_[r][j], field_.mul(f, v[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool contains(std::vector<Elt> v) const {
        reduce(v);
        return pivot_of(v) == width_;
    }

    bool contains(const RowSpace& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const RowSpace& a, const RowSpace& b) {
        if (a.width_ != b.width_ || a.pivots_ != b.pivots_) return false;
        for (std::size_t i = 0; i < a.rows_.size(); ++i)
            for (std::size_t j = 0; j < a.width_; ++j)
                if (!a.field_.eq(a.rows_[i][j], b.rows_[i][j])) return false;
        return true;
    }
    friend bool operator!=(const RowSpace& a, const RowSpace& b) { return !(a == b); }

    const std::vector<std::vector<Elt>>& basis() const { return rows_; }

private:
    void reduce(std::vector<Elt>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto f = v[pivots_[r]];
            if (field_.is_zero(f)) continue;
            for (std::size_t j = 0; j < width_; ++j)
                v[j] = field_.sub(v[j], field_.mul(f, rows_[r][j]));
        }
    }
    std::size_t pivot_of(const std::vector<Elt>& v) const {
        for (std::size_t j = 0; j < width_; ++j)
            if (!field_.is_zero(v[j])) return j;
        return width_;
    }

    F field_;
    std::size_t width_;
    std::vector<std::vector<Elt>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace bisetring
