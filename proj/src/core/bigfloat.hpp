#ifndef ORIFOLD_CORE_BIGFLOAT_HPP
#define ORIFOLD_CORE_BIGFLOAT_HPP

#include "core/scalar.hpp"

#include <mpfr.h>

#include <string>
#include <vector>

namespace orifold {

// Arbitrary-precision binary float (the "float shadow" of the exact field).
// Every value carries its working precision; binary operations compute at the
// larger of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(f_, prec); mpfr_set_zero(f_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_swap(f_, o.f_);
    }
    ~BigFloat() { mpfr_clear(f_); }
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(f_, o.f_);
        return *this;
    }

    static BigFloat from_rat(const Rat& r, mpfr_prec_t prec);
    static BigFloat from_long(long n, mpfr_prec_t prec);
    static BigFloat from_double(double d, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(f_); }
    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(f_); }
    bool is_zero() const { return mpfr_zero_p(f_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) > 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;

    static BigFloat exp(const BigFloat& x);
    static BigFloat log(const BigFloat& x);
    static BigFloat cos(const BigFloat& x);
    static BigFloat sin(const BigFloat& x);
    static BigFloat atan2(const BigFloat& y, const BigFloat& x);

    std::string str(int digits = 20) const;

private:
    mpfr_t f_;
};

// Complex number over BigFloat.
struct CFloat {
    BigFloat re, im;

    explicit CFloat(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    CFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static CFloat from_scalar(const Scalar& s, mpfr_prec_t prec) {
        return CFloat(BigFloat::from_rat(s.re(), prec), BigFloat::from_rat(s.im(), prec));
    }
    static CFloat one(mpfr_prec_t prec) {
        return CFloat(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
    }

    friend CFloat operator+(const CFloat& a, const CFloat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CFloat operator-(const CFloat& a, const CFloat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CFloat operator*(const CFloat& a, const CFloat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CFloat operator/(const CFloat& a, const CFloat& b);
    CFloat operator-() const { return {-re, -im}; }

    BigFloat abs() const { return (re * re + im * im).sqrt(); }

    // e^z and principal log z.
    static CFloat exp(const CFloat& z);
    static CFloat log(const CFloat& z);
    // e^{2*pi*i*s} for exact s, evaluated at the given precision.
    static CFloat exp2pii(const Scalar& s, mpfr_prec_t prec);
};

// Dense complex-float matrix, row-major.
class CMatrix {
public:
    CMatrix() : n_(0), m_(0) {}
    CMatrix(int rows, int cols, mpfr_prec_t prec);
    static CMatrix identity(int n, mpfr_prec_t prec);

    int rows() const { return n_; }
    int cols() const { return m_; }
    CFloat& at(int i, int j) { return e_[static_cast<size_t>(i) * m_ + j]; }
    const CFloat& at(int i, int j) const { return e_[static_cast<size_t>(i) * m_ + j]; }

    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    CMatrix inverse() const;
    // Matrix exponential by scaling-and-squaring with a Taylor core.
    CMatrix exp() const;
    // Largest entry modulus, as a double (diagnostics and scaling).
    double max_abs() const;
    // max_ij |a_ij - b_ij| relative to max(1, entries).
    static double rel_distance(const CMatrix& a, const CMatrix& b);

    mpfr_prec_t prec() const { return prec_; }

private:
    int n_, m_;
    mpfr_prec_t prec_ = 128;
    std::vector<CFloat> e_;
};

}  // namespace orifold

#endif
