#ifndef ORIFOLD_SERIES_SMATRIX_HPP
#define ORIFOLD_SERIES_SMATRIX_HPP

#include "series/series.hpp"

#include <vector>

namespace orifold {

// Dense matrix over Q(i).
class ScalarMatrix {
public:
    ScalarMatrix() : n_(0), m_(0) {}
    ScalarMatrix(int rows, int cols) : n_(rows), m_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static ScalarMatrix identity(int n);
    static ScalarMatrix diagonal(const std::vector<Scalar>& d);

    int rows() const { return n_; }
    int cols() const { return m_; }
    Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * m_ + j]; }
    const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * m_ + j]; }

    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& a);
    ScalarMatrix operator-() const;
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

    ScalarMatrix transpose() const;
    Scalar det() const;
    ScalarMatrix inverse() const;  // throws std::domain_error when singular
    bool is_zero() const;
    Scalar trace() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    std::string str() const;

private:
    int n_, m_;
    std::vector<Scalar> e_;
};

// Matrix of truncated series sharing nvars and order.
class SeriesMatrix {
public:
    SeriesMatrix() : n_(0), m_(0), nvars_(0), order_(-1) {}
    SeriesMatrix(int rows, int cols, int nvars, int order);
    static SeriesMatrix identity(int n, int nvars, int order);
    static SeriesMatrix from_constant(const ScalarMatrix& c, int nvars, int order);

    int rows() const { return n_; }
    int cols() const { return m_; }
    int nvars() const { return nvars_; }
    int order() const { return order_; }

    FormalSeries& at(int i, int j) { return e_[static_cast<size_t>(i) * m_ + j]; }
    const FormalSeries& at(int i, int j) const { return e_[static_cast<size_t>(i) * m_ + j]; }

    ScalarMatrix constant_term() const;
    ScalarMatrix coeff(const MultiIndex& m) const;

    friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator*(const FormalSeries& s, const SeriesMatrix& a);
    friend SeriesMatrix operator*(const Scalar& c, const SeriesMatrix& a);
    SeriesMatrix operator-() const;

    SeriesMatrix transpose() const;
    SeriesMatrix diff(int var) const;
    SeriesMatrix truncated(int order) const;
    bool is_zero() const;

    // Order-by-order inverse (Newton doubling); requires invertible constant term.
    SeriesMatrix inverse() const;

    // Commutator and helpers used throughout the isomonodromic side.
    friend SeriesMatrix commutator(const SeriesMatrix& a, const SeriesMatrix& b) {
        return a * b - b * a;
    }

private:
    int n_, m_, nvars_, order_;
    std::vector<FormalSeries> e_;
};

}  // namespace orifold

#endif
