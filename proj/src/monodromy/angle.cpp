#include "monodromy/angle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orifold {

bool ExactAngle::is_eighth() const {
    if (!offset.is_zero()) return false;
    Rat four = Rat(4) * pi_mult;
    return four.is_integer();
}

int ExactAngle::eighth_index() const {
    Rat four = Rat(4) * pi_mult;  // integer
    long k = four.to_long() % 8;
    if (k < 0) k += 8;
    return static_cast<int>(k);
}

double ExactAngle::to_double() const {
    return pi_mult.to_double() * 3.14159265358979323846 + offset.to_double();
}

BigFloat ExactAngle::radians(mpfr_prec_t prec) const {
    return BigFloat::from_rat(pi_mult, prec) * BigFloat::pi(prec) + BigFloat::from_rat(offset, prec);
}

// integer components of the eight exact directions e^{i k pi / 4}
static const int kEighthX[8] = {1, 1, 0, -1, -1, -1, 0, 1};
static const int kEighthY[8] = {0, 1, 1, 1, 0, -1, -1, -1};

RayDirection RayDirection::normalized() const {
    // scale to coprime integers with the same orientation
    mpz_t num_x, num_y, den_x, den_y, g, sx, sy;
    mpz_inits(num_x, num_y, den_x, den_y, g, sx, sy, nullptr);
    mpz_set(num_x, mpq_numref(x.raw()));
    mpz_set(den_x, mpq_denref(x.raw()));
    mpz_set(num_y, mpq_numref(y.raw()));
    mpz_set(den_y, mpq_denref(y.raw()));
    // common denominator
    mpz_mul(sx, num_x, den_y);
    mpz_mul(sy, num_y, den_x);
    mpz_gcd(g, sx, sy);
    if (mpz_sgn(g) != 0) {
        mpz_divexact(sx, sx, g);
        mpz_divexact(sy, sy, g);
    }
    RayDirection r;
    r.x = Rat::from_mpz(sx);
    r.y = Rat::from_mpz(sy);
    mpz_clears(num_x, num_y, den_x, den_y, g, sx, sy, nullptr);
    return r;
}

bool RayDirection::same_ray(const RayDirection& o) const {
    Rat cross = x * o.y - y * o.x;
    if (!cross.is_zero()) return false;
    Rat dot = x * o.x + y * o.y;
    return dot.sign() > 0;
}

double RayDirection::angle_double() const { return std::atan2(y.to_double(), x.to_double()); }

bool operator==(const RayDirection& a, const RayDirection& b) {
    RayDirection na = a.normalized(), nb = b.normalized();
    return na.x == nb.x && na.y == nb.y;
}

bool operator<(const RayDirection& a, const RayDirection& b) {
    RayDirection na = a.normalized(), nb = b.normalized();
    if (na.x != nb.x) return na.x < nb.x;
    return na.y < nb.y;
}

RayDirection stokes_direction(const Scalar& ui, const Scalar& uj) {
    Scalar w = Scalar(Rat(0), Rat(-1)) * (ui.conj() - uj.conj());
    return RayDirection{w.re(), w.im()};
}

std::vector<RayDirection> stokes_ray_set(const std::vector<Scalar>& u) {
    int n = static_cast<int>(u.size());
    std::vector<RayDirection> rays;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || u[static_cast<size_t>(i)] == u[static_cast<size_t>(j)]) continue;
            RayDirection d = stokes_direction(u[static_cast<size_t>(i)], u[static_cast<size_t>(j)]).normalized();
            bool dup = false;
            for (const auto& r : rays)
                if (r.same_ray(d)) dup = true;
            if (!dup) rays.push_back(d);
        }
    std::sort(rays.begin(), rays.end());
    return rays;
}

bool is_admissible(const ExactAngle& tau, const std::vector<Scalar>& u) {
    if (!tau.is_eighth()) {
        // a rational (or rational-multiple-of-pi, non-eighth) angle never
        // coincides with the argument of a Gaussian rational
        return true;
    }
    int k = tau.eighth_index();
    RayDirection d{Rat(kEighthX[k]), Rat(kEighthY[k])};
    for (const auto& r : stokes_ray_set(u))
        if (r.same_ray(d)) return false;
    return true;
}

int sign_re_eitau(const ExactAngle& tau, const Scalar& w, mpfr_prec_t bits, bool* exact) {
    if (exact) *exact = true;
    if (tau.is_eighth()) {
        int k = tau.eighth_index();
        // Re(e^{i tau} w) = cos tau Re w - sin tau Im w, positive scale dropped
        Rat v = Rat(kEighthX[k]) * w.re() - Rat(kEighthY[k]) * w.im();
        return v.sign();
    }
    if (exact) *exact = false;
    BigFloat t = tau.radians(bits);
    BigFloat v = BigFloat::cos(t) * BigFloat::from_rat(w.re(), bits) -
                 BigFloat::sin(t) * BigFloat::from_rat(w.im(), bits);
    if (v.is_zero()) return 0;
    return v.sign();
}

LexOrder lexicographic_order(const std::vector<Scalar>& u, const ExactAngle& tau, mpfr_prec_t bits) {
    if (!is_admissible(tau, u)) throw std::domain_error("lexicographic_order: non-admissible direction");
    int n = static_cast<int>(u.size());
    LexOrder out;
    out.perm.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.perm[static_cast<size_t>(i)] = i;
    std::stable_sort(out.perm.begin(), out.perm.end(), [&](int a, int b) {
        if (u[static_cast<size_t>(a)] == u[static_cast<size_t>(b)]) return a < b;
        // descending projection Re(e^{i tau} u)
        int s = sign_re_eitau(tau, u[static_cast<size_t>(a)] - u[static_cast<size_t>(b)], bits);
        if (s == 0) return a < b;  // tie between distinct points: flag below
        return s > 0;
    });
    for (int i = 0; i + 1 < n; ++i) {
        int a = out.perm[static_cast<size_t>(i)], b = out.perm[static_cast<size_t>(i + 1)];
        if (u[static_cast<size_t>(a)] != u[static_cast<size_t>(b)] &&
            sign_re_eitau(tau, u[static_cast<size_t>(a)] - u[static_cast<size_t>(b)], bits) == 0)
            out.degenerate = true;
    }
    return out;
}

std::vector<std::vector<int>> coalescence_blocks(const std::vector<Scalar>& u) {
    int n = static_cast<int>(u.size());
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) {
        if (used[static_cast<size_t>(i)]) continue;
        std::vector<int> blk{i};
        used[static_cast<size_t>(i)] = true;
        for (int j = i + 1; j < n; ++j)
            if (!used[static_cast<size_t>(j)] && u[static_cast<size_t>(i)] == u[static_cast<size_t>(j)]) {
                blk.push_back(j);
                used[static_cast<size_t>(j)] = true;
            }
        blocks.push_back(blk);
    }
    return blocks;
}

}  // namespace orifold
