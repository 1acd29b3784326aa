#ifndef ORIFOLD_CORE_SCALAR_HPP
#define ORIFOLD_CORE_SCALAR_HPP

#include "core/rat.hpp"

#include <string>

namespace orifold {

// Element of the coefficient field Q(i): exact Gaussian rational.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}
    Scalar(Rat re) : re_(std::move(re)) {}
    Scalar(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_integer() const { return im_.is_zero() && re_.is_integer(); }

    Scalar conj() const { return Scalar(re_, -im_); }

    // Squared modulus |z|^2, a rational.
    Rat norm2() const { return re_ * re_ + im_ * im_; }

    Scalar inv() const {
        Rat n = norm2();
        if (n.is_zero()) throw std::domain_error("Scalar: division by zero");
        return Scalar(re_ / n, -im_ / n);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Deterministic total order (real part, then imaginary part); used for
    // canonical iteration and dedup, not a field order.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // "p/q" for real values, "p/q+r/s*i" otherwise.
    std::string str() const;

    double abs_double() const;

private:
    Rat re_, im_;
};

inline Scalar operator*(const Rat& a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace orifold

#endif
