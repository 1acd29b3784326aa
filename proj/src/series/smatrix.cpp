#include "series/smatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace orifold {

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = Scalar(1);
    return r;
}

ScalarMatrix ScalarMatrix::diagonal(const std::vector<Scalar>& d) {
    int n = static_cast<int>(d.size());
    ScalarMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = d[static_cast<size_t>(i)];
    return r;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix r(a.n_, a.m_);
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}
ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix r(a.n_, a.m_);
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.m_ != b.n_) throw std::invalid_argument("ScalarMatrix: shape mismatch");
    ScalarMatrix r(a.n_, b.m_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.m_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.m_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}
ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& a) {
    ScalarMatrix r(a);
    for (auto& x : r.e_) x *= c;
    return r;
}
ScalarMatrix ScalarMatrix::operator-() const {
    ScalarMatrix r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix r(m_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Scalar ScalarMatrix::trace() const {
    Scalar t;
    for (int i = 0; i < n_ && i < m_; ++i) t += at(i, i);
    return t;
}

Scalar ScalarMatrix::det() const {
    if (n_ != m_) throw std::invalid_argument("ScalarMatrix: not square");
    ScalarMatrix a(*this);
    Scalar d(1);
    for (int c = 0; c < n_; ++c) {
        int p = -1;
        for (int r = c; r < n_; ++r)
            if (!a.at(r, c).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) return Scalar();
        if (p != c) {
            for (int j = 0; j < n_; ++j) std::swap(a.at(p, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Scalar inv = a.at(c, c).inv();
        for (int r = c + 1; r < n_; ++r) {
            if (a.at(r, c).is_zero()) continue;
            Scalar f = a.at(r, c) * inv;
            for (int j = c; j < n_; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return d;
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (n_ != m_) throw std::invalid_argument("ScalarMatrix: not square");
    ScalarMatrix a(*this), inv = identity(n_);
    for (int c = 0; c < n_; ++c) {
        int p = -1;
        for (int r = c; r < n_; ++r)
            if (!a.at(r, c).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) throw std::domain_error("ScalarMatrix: singular");
        if (p != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(p, j), a.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        Scalar f = a.at(c, c).inv();
        for (int j = 0; j < n_; ++j) {
            a.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            Scalar g = a.at(r, c);
            for (int j = 0; j < n_; ++j) {
                a.at(r, j) -= g * a.at(c, j);
                inv.at(r, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> r(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

std::string ScalarMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

SeriesMatrix::SeriesMatrix(int rows, int cols, int nvars, int order)
    : n_(rows), m_(cols), nvars_(nvars), order_(order) {
    e_.assign(static_cast<size_t>(rows) * cols, FormalSeries::zero(nvars, order));
}

SeriesMatrix SeriesMatrix::identity(int n, int nvars, int order) {
    SeriesMatrix r(n, n, nvars, order);
    for (int i = 0; i < n; ++i) r.at(i, i) = FormalSeries::constant(Scalar(1), nvars, order);
    return r;
}

SeriesMatrix SeriesMatrix::from_constant(const ScalarMatrix& c, int nvars, int order) {
    SeriesMatrix r(c.rows(), c.cols(), nvars, order);
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            r.at(i, j) = FormalSeries::constant(c.at(i, j), nvars, order);
    return r;
}

ScalarMatrix SeriesMatrix::constant_term() const {
    ScalarMatrix r(n_, m_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j) r.at(i, j) = at(i, j).constant_term();
    return r;
}

ScalarMatrix SeriesMatrix::coeff(const MultiIndex& m) const {
    ScalarMatrix r(n_, m_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j) r.at(i, j) = at(i, j).coeff(m);
    return r;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix r(a.n_, a.m_, a.nvars_, std::min(a.order_, b.order_));
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}
SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix r(a.n_, a.m_, a.nvars_, std::min(a.order_, b.order_));
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}
SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.m_ != b.n_) throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix r(a.n_, b.m_, a.nvars_, std::min(a.order_, b.order_));
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.m_; ++k) {
            const FormalSeries& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.m_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}
SeriesMatrix operator*(const FormalSeries& s, const SeriesMatrix& a) {
    SeriesMatrix r(a.n_, a.m_, a.nvars_, std::min(s.order(), a.order_));
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = s * a.e_[k];
    return r;
}
SeriesMatrix operator*(const Scalar& c, const SeriesMatrix& a) {
    SeriesMatrix r(a);
    for (auto& x : r.e_) x = c * x;
    return r;
}
SeriesMatrix SeriesMatrix::operator-() const {
    SeriesMatrix r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
}

SeriesMatrix SeriesMatrix::transpose() const {
    SeriesMatrix r(m_, n_, nvars_, order_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m_; ++j) r.at(j, i) = at(i, j);
    return r;
}

SeriesMatrix SeriesMatrix::diff(int var) const {
    SeriesMatrix r(n_, m_, nvars_, order_ >= 0 ? order_ - 1 : -1);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].diff(var);
    return r;
}

SeriesMatrix SeriesMatrix::truncated(int order) const {
    SeriesMatrix r(n_, m_, nvars_, std::min(order, order_));
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].truncated(order);
    return r;
}

bool SeriesMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

SeriesMatrix SeriesMatrix::inverse() const {
    if (n_ != m_) throw std::invalid_argument("SeriesMatrix: not square");
    ScalarMatrix c0inv = constant_term().inverse();  // throws when singular
    SeriesMatrix x = from_constant(c0inv, nvars_, order_);
    SeriesMatrix two = identity(n_, nvars_, order_) + identity(n_, nvars_, order_);
    // Newton iteration doubles the number of correct orders per step.
    int correct = 0;
    while (correct < order_) {
        x = x * (two - (*this) * x);
        correct = correct * 2 + 1;
    }
    return x;
}

}  // namespace orifold
