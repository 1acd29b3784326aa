#include "monodromy/jump.hpp"

#include <stdexcept>

namespace orifold {

namespace {

bool angle_equal(const ExactAngle& a, const ExactAngle& b) {
    return a.pi_mult == b.pi_mult && a.offset == b.offset;
}

// closed-arc membership: the circle arcs include their endpoints (the contour
// nodes), where the jump formulas extend continuously
bool angle_between(const ExactAngle& x, const ExactAngle& lo, const ExactAngle& hi) {
    if (angle_equal(x, lo) || angle_equal(x, hi)) return true;
    double xv = x.to_double(), lv = lo.to_double(), hv = hi.to_double();
    return lv < xv && xv < hv;
}

}  // namespace

CMatrix jump_matrix(const MonodromyDatum& m, ContourArc arc, const ZPoint& z) {
    mpfr_prec_t bits = m.float_bits;
    int n = m.n;
    if (z.radius.sign() <= 0) throw std::domain_error("jump_matrix: |z| must be positive");

    ExactAngle tau_minus{m.tau.pi_mult - Rat(1), m.tau.offset};
    ExactAngle tau_plus{m.tau.pi_mult + Rat(1), m.tau.offset};
    switch (arc) {
        case ContourArc::MinusInf:
            if (!angle_equal(z.arg, tau_minus))
                throw std::domain_error("jump_matrix: z off the Gamma_{-inf} arc (arg must be tau - pi)");
            break;
        case ContourArc::PlusInf:
            if (!angle_equal(z.arg, m.tau))
                throw std::domain_error("jump_matrix: z off the Gamma_{+inf} arc (arg must be tau)");
            break;
        case ContourArc::Circle1:
            if (!angle_between(z.arg, tau_minus, m.tau))
                throw std::domain_error("jump_matrix: z off the Gamma_1 arc");
            break;
        case ContourArc::Circle2:
            if (!angle_between(z.arg, m.tau, tau_plus))
                throw std::domain_error("jump_matrix: z off the Gamma_2 arc");
            break;
    }

    // log z = log r + i arg, z = r e^{i arg}
    BigFloat logr = BigFloat::log(BigFloat::from_rat(z.radius, bits));
    BigFloat argv = z.arg.radians(bits);
    CFloat logz(logr, argv);
    CFloat zval(BigFloat::from_rat(z.radius, bits) * BigFloat::cos(argv),
                BigFloat::from_rat(z.radius, bits) * BigFloat::sin(argv));

    // e^{Q} diagonal with Q = U z + B log z
    CMatrix eq(n, n, bits), eq_inv(n, n, bits);
    for (int i = 0; i < n; ++i) {
        CFloat q = CFloat::from_scalar(m.u[static_cast<size_t>(i)], bits) * zval +
                   CFloat::from_scalar(m.B.at(i, i), bits) * logz;
        eq.at(i, i) = CFloat::exp(q);
        eq_inv.at(i, i) = CFloat::exp(-q);
    }

    auto zpow = [&](const ScalarMatrix& mexp, int sign) {
        // z^{sign * M} = exp(sign * M * log z)
        CMatrix x(n, n, bits);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CFloat v = CFloat::from_scalar(mexp.at(i, j), bits) * logz;
                x.at(i, j) = sign > 0 ? v : -v;
            }
        return x.exp();
    };

    switch (arc) {
        case ContourArc::MinusInf:
            return eq * to_cmatrix(m.S1.inverse(), bits) * eq_inv;
        case ContourArc::PlusInf:
            return eq * to_cmatrix(m.S2, bits) * eq_inv;
        case ContourArc::Circle1:
            return eq * to_cmatrix(m.C.inverse(), bits) * zpow(m.L, -1) * zpow(m.D, -1);
        case ContourArc::Circle2:
            return eq * to_cmatrix(m.S2.inverse() * m.C.inverse(), bits) * zpow(m.L, -1) *
                   zpow(m.D, -1);
    }
    throw std::logic_error("jump_matrix: unreachable");
}

}  // namespace orifold
