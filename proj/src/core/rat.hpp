#ifndef ORIFOLD_CORE_RAT_HPP
#define ORIFOLD_CORE_RAT_HPP

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orifold {

// Arbitrary-precision rational, GMP-backed, always stored canonically
// (reduced, positive denominator).
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rat(long num, long den);
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    ~Rat() { mpq_clear(q_); }

    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }

    // Parses "p", "-p" or "p/q" in base 10. Throws on malformed input or q = 0.
    static Rat parse(const std::string& s);

    static Rat from_mpz(const mpz_t z) {
        Rat r;
        mpq_set_z(r.q_, z);
        return r;
    }

    std::string str() const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    // Only valid when is_integer() and the value fits in a long.
    long to_long() const;

    // Largest integer <= value.
    Rat floor() const;

    double to_double() const { return mpq_get_d(q_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        Rat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rat operator-() const {
        Rat r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rat& operator+=(const Rat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    Rat abs() const {
        Rat r;
        mpq_abs(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    const mpq_t& raw() const { return q_; }

private:
    mpq_t q_;
};

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) { return Rat(n, d); }

}  // namespace orifold

#endif
