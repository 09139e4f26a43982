// Dense matrices for the small (g <= 3, and 2g x 2g) linear algebra in the
// period layer. Generic over the scalar so both precision policies work.
#ifndef BAKER_SMALLMAT_HPP
#define BAKER_SMALLMAT_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace baker {

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c) : r_(r), c_(c), d_(r * c) {}
    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    Mat operator+(const Mat& o) const {
        Mat m(r_, c_);
        for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] + o.d_[i];
        return m;
    }
    Mat operator-(const Mat& o) const {
        Mat m(r_, c_);
        for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] - o.d_[i];
        return m;
    }
    Mat operator*(const Mat& o) const {
        Mat m(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const T& v = (*this)(i, k);
                for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += v * o(k, j);
            }
        return m;
    }
    Mat operator*(const T& s) const {
        Mat m(r_, c_);
        for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] * s;
        return m;
    }
    Mat transposed() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(r_, T(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    // Gauss-Jordan with partial pivoting
    Mat inverse() const {
        using std::abs;
        if (r_ != c_) throw std::logic_error("inverse of non-square matrix");
        std::size_t n = r_;
        Mat a = *this, inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            auto best = abs(a(col, col));
            for (std::size_t i = col + 1; i < n; ++i)
                if (abs(a(i, col)) > best) {
                    best = abs(a(i, col));
                    piv = i;
                }
            if (!(best > 0)) throw std::domain_error("singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            T d = a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) /= d;
                inv(col, j) /= d;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col) continue;
                T f = a(i, col);
                if (f == T(0)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    a(i, j) -= f * a(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    T max_abs_diff(const Mat& o) const {
        using std::abs;
        T m(0);
        for (std::size_t i = 0; i < d_.size(); ++i) {
            T v = T(abs(d_[i] - o.d_[i]));
            if (abs(v) > abs(m)) m = v;
        }
        return m;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

// eigenvalues of a small real symmetric matrix by cyclic Jacobi rotations
template <class R>
std::vector<R> symmetric_eigenvalues(Mat<R> a) {
    using std::abs;
    using std::sqrt;
    std::size_t n = a.rows();
    for (int sweep = 0; sweep < 60; ++sweep) {
        R off(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (!(off > R(1e-40))) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (abs(a(p, q)) == R(0)) continue;
                R theta = (a(q, q) - a(p, p)) / (R(2) * a(p, q));
                R t = R(1) / (abs(theta) + sqrt(theta * theta + R(1)));
                if (theta < R(0)) t = -t;
                R c = R(1) / sqrt(t * t + R(1)), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    R akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    R apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<R> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    return ev;
}

}  // namespace baker

#endif
