#include "core/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orifold {

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    return *this;
}

BigFloat BigFloat::from_rat(const Rat& r, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_q(x.f_, r.raw(), MPFR_RNDN);
    return x;
}

BigFloat BigFloat::from_long(long n, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_si(x.f_, n, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_d(x.f_, d, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_pi(x.f_, MPFR_RNDN);
    return x;
}

static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
    BigFloat r(join(a, b));
    mpfr_div(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.f_, f_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.f_, f_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.f_, f_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::exp(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_exp(r.f_, x.f_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::log(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_log(r.f_, x.f_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::cos(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_cos(r.f_, x.f_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::sin(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_sin(r.f_, x.f_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(join(y, x));
    mpfr_atan2(r.f_, y.f_, x.f_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, f_);
    return std::string(buf);
}

CFloat operator/(const CFloat& a, const CFloat& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

CFloat CFloat::exp(const CFloat& z) {
    BigFloat m = BigFloat::exp(z.re);
    return {m * BigFloat::cos(z.im), m * BigFloat::sin(z.im)};
}

CFloat CFloat::log(const CFloat& z) {
    BigFloat n2 = z.re * z.re + z.im * z.im;
    if (n2.is_zero()) throw std::domain_error("CFloat: log of zero");
    BigFloat half = BigFloat::from_rat(rat(1, 2), n2.prec());
    return {half * BigFloat::log(n2), BigFloat::atan2(z.im, z.re)};
}

CFloat CFloat::exp2pii(const Scalar& s, mpfr_prec_t prec) {
    BigFloat two_pi = BigFloat::from_long(2, prec) * BigFloat::pi(prec);
    BigFloat x = BigFloat::from_rat(s.re(), prec);
    BigFloat y = BigFloat::from_rat(s.im(), prec);
    // e^{2 pi i (x + i y)} = e^{-2 pi y} (cos 2 pi x + i sin 2 pi x)
    BigFloat m = BigFloat::exp(-(two_pi * y));
    BigFloat a = two_pi * x;
    return {m * BigFloat::cos(a), m * BigFloat::sin(a)};
}

CMatrix::CMatrix(int rows, int cols, mpfr_prec_t prec) : n_(rows), m_(cols), prec_(prec) {
    e_.assign(static_cast<size_t>(rows) * cols, CFloat(prec));
}

CMatrix CMatrix::identity(int n, mpfr_prec_t prec) {
    CMatrix r(n, n, prec);
    for (int i = 0; i < n; ++i) r.at(i, i) = CFloat::one(prec);
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.n_, a.m_, a.prec_);
    for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}
CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.n_, a.m_, a.prec_);
    for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}
CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.m_ != b.n_) throw std::invalid_argument("CMatrix: shape mismatch");
    CMatrix r(a.n_, b.m_, a.prec_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.m_; ++k) {
            const CFloat& aik = a.at(i, k);
            for (int j = 0; j < b.m_; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
    return r;
}

CMatrix CMatrix::inverse() const {
    if (n_ != m_) throw std::invalid_argument("CMatrix: not square");
    CMatrix a(*this), inv = identity(n_, prec_);
    for (int c = 0; c < n_; ++c) {
        int p = -1;
        double best = 0;
        for (int r = c; r < n_; ++r) {
            double v = a.at(r, c).abs().to_double();
            if (p < 0 || v > best) {
                best = v;
                p = r;
            }
        }
        if (best == 0.0) throw std::domain_error("CMatrix: singular");
        if (p != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(p, j), a.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        CFloat piv = a.at(c, c);
        for (int j = 0; j < n_; ++j) {
            a.at(c, j) = a.at(c, j) / piv;
            inv.at(c, j) = inv.at(c, j) / piv;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c) continue;
            CFloat f = a.at(r, c);
            if (f.abs().to_double() == 0.0) continue;
            for (int j = 0; j < n_; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(c, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(c, j);
            }
        }
    }
    return inv;
}

double CMatrix::max_abs() const {
    double m = 0;
    for (const auto& z : e_) m = std::max(m, z.abs().to_double());
    return m;
}

CMatrix CMatrix::exp() const {
    if (n_ != m_) throw std::invalid_argument("CMatrix: not square");
    int s = 0;
    double norm = max_abs() * n_;
    while (norm > 0.5 && s < 64) {
        norm /= 2;
        ++s;
    }
    CFloat scale = CFloat::one(prec_);
    for (int k = 0; k < s; ++k)
        scale.re = scale.re / BigFloat::from_long(2, prec_);
    CMatrix x(n_, n_, prec_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) x.at(i, j) = at(i, j) * scale;

    CMatrix sum = identity(n_, prec_), term = identity(n_, prec_);
    long kmax = prec_ + 32;
    for (long k = 1; k <= kmax; ++k) {
        term = term * x;
        CFloat invk = CFloat::one(prec_) / CFloat(BigFloat::from_long(k, prec_), BigFloat::from_long(0, prec_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) term.at(i, j) = term.at(i, j) * invk;
        sum = sum + term;
        double t = term.max_abs();
        if (t < std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(prec_ + 16, 1000)))) break;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return sum;
}

double CMatrix::rel_distance(const CMatrix& a, const CMatrix& b) {
    double scale = std::max({1.0, a.max_abs(), b.max_abs()});
    double d = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) d = std::max(d, (a.at(i, j) - b.at(i, j)).abs().to_double());
    return d / scale;
}

}  // namespace orifold
