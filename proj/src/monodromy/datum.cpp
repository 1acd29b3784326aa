#include "monodromy/datum.hpp"

#include <stdexcept>

namespace orifold {

std::vector<Scalar> MonodromyDatum::mu() const {
    std::vector<Scalar> out;
    for (int a = 0; a < n; ++a) out.push_back(-D.at(a, a) - L.at(a, a));
    return out;
}

ScalarMatrix MonodromyDatum::r_matrix() const {
    ScalarMatrix r = L;
    for (int a = 0; a < n; ++a) r.at(a, a) = Scalar();
    return r;
}

Scalar exact_exp2pii(const Scalar& theta) {
    if (theta.is_integer()) return Scalar(1);
    throw std::domain_error("exact mode: e^{2 pi i theta} with non-integer theta rejected");
}

bool exp2pii_is_identity(const ScalarMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j) {
                if (!m.at(i, j).is_integer()) return false;
            } else if (!m.at(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

CMatrix to_cmatrix(const ScalarMatrix& m, mpfr_prec_t bits) {
    CMatrix c(m.rows(), m.cols(), bits);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) c.at(i, j) = CFloat::from_scalar(m.at(i, j), bits);
    return c;
}

CMatrix exp2pii_float(const ScalarMatrix& m, mpfr_prec_t bits) {
    // exp(2 pi i M)
    CMatrix a(m.rows(), m.cols(), bits);
    BigFloat two_pi = BigFloat::from_long(2, bits) * BigFloat::pi(bits);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            CFloat z = CFloat::from_scalar(m.at(i, j), bits);
            // multiply by 2 pi i
            a.at(i, j) = CFloat(-(two_pi * z.im), two_pi * z.re);
        }
    return a.exp();
}

static bool is_diagonal(const ScalarMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && !m.at(i, j).is_zero()) return false;
    return true;
}

ValidationReport validate_datum(const MonodromyDatum& m) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& witness = "",
                   bool exact = true) {
        rep.conditions.push_back({name, pass, exact, witness});
    };
    int n = m.n;

    // (1) B diagonal
    add("(1) B diagonal", is_diagonal(m.B), is_diagonal(m.B) ? "" : "off-diagonal entry in B");

    // (2) D integer diagonal
    {
        bool ok = is_diagonal(m.D);
        for (int i = 0; i < n && ok; ++i) ok = m.D.at(i, i).is_integer();
        add("(2) D integer diagonal", ok, ok ? "" : "non-integer or off-diagonal entry in D");
    }

    // (3) tr B = tr D + tr L
    {
        Scalar lhs = m.B.trace(), rhs = m.D.trace() + m.L.trace();
        add("(3) tr B = tr D + tr L", lhs == rhs,
            lhs == rhs ? "" : "tr B = " + lhs.str() + ", tr D + tr L = " + rhs.str());
    }

    // (4) invertibility and unit determinants
    {
        bool inv = !m.S1.det().is_zero() && !m.S2.det().is_zero() && !m.C.det().is_zero();
        bool unit = m.S1.det().is_one() && m.S2.det().is_one();
        add("(4) S1,S2,C invertible with det S1 = det S2 = 1", inv && unit,
            inv ? (unit ? "" : "detS1 = " + m.S1.det().str() + ", detS2 = " + m.S2.det().str())
                : "singular matrix");
    }

    // (5) unit diagonals of S1, S2
    {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            ok = ok && m.S1.at(i, i).is_one() && m.S2.at(i, i).is_one();
        add("(5) diag S1 = diag S2 = 1", ok, ok ? "" : "non-unit diagonal entry");
    }

    // (6)-(7) triangular support w.r.t. (u, tau)
    {
        ScalarMatrix s1inv = m.S1.det().is_zero() ? ScalarMatrix::identity(n) : m.S1.inverse();
        bool ok6 = true, ok7 = true, exact6 = true, exact7 = true;
        std::string w6, w7;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Scalar du = m.u[static_cast<size_t>(i)] - m.u[static_cast<size_t>(j)];
                bool ex = true;
                int s = sign_re_eitau(m.tau, du, m.float_bits, &ex);
                exact6 = exact6 && ex;
                exact7 = exact7 && ex;
                // (6): (S1^{-1})_{ij} = 0 if Re(e^{i(tau-pi)}(u^i-u^j)) > 0, i.e. s < 0
                if (s < 0 && !s1inv.at(i, j).is_zero()) {
                    ok6 = false;
                    w6 = "(S1^-1)_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "} nonzero in the forbidden sector";
                }
                // (7): (S2)_{ij} = 0 if Re(e^{i tau}(u^i-u^j)) > 0
                if (s > 0 && !m.S2.at(i, j).is_zero()) {
                    ok7 = false;
                    w7 = "(S2)_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "} nonzero in the forbidden sector";
                }
            }
        add("(6) S1 support", ok6, w6, exact6);
        add("(7) S2 support", ok7, w7, exact7);
    }

    // (8) S1^{-1} e^{2 pi i B} S2^{-1} = C^{-1} e^{2 pi i L} C
    {
        bool exact_possible = exp2pii_is_identity(m.B) && exp2pii_is_identity(m.L);
        if (m.mode == NumericMode::Exact || exact_possible) {
            if (!exact_possible) {
                add("(8) cyclic identity", false,
                    "exact mode: e^{2 pi i B} or e^{2 pi i L} not exactly representable "
                    "(non-integer exponents); use float mode",
                    true);
            } else {
                ScalarMatrix lhs = m.S1.inverse() * m.S2.inverse();
                ScalarMatrix rhs = ScalarMatrix::identity(n);
                bool ok = lhs == rhs;
                add("(8) cyclic identity", ok, ok ? "" : "S1^{-1} S2^{-1} != 1 with trivial exponentials");
            }
        } else {
            CMatrix s1 = to_cmatrix(m.S1, m.float_bits).inverse();
            CMatrix s2 = to_cmatrix(m.S2, m.float_bits).inverse();
            CMatrix c = to_cmatrix(m.C, m.float_bits);
            CMatrix lhs = s1 * exp2pii_float(m.B, m.float_bits) * s2;
            CMatrix rhs = c.inverse() * exp2pii_float(m.L, m.float_bits) * c;
            double d = CMatrix::rel_distance(lhs, rhs);
            add("(8) cyclic identity", d <= m.tol,
                d <= m.tol ? "" : "relative deviation " + std::to_string(d), false);
        }
    }

    // (9) coalescence vanishing
    {
        bool ok = true;
        std::string w;
        ScalarMatrix s1inv = m.S1.det().is_zero() ? ScalarMatrix::identity(n) : m.S1.inverse();
        for (const auto& blk : coalescence_blocks(m.u)) {
            for (size_t a = 0; a < blk.size(); ++a)
                for (size_t b = 0; b < blk.size(); ++b) {
                    if (a == b) continue;
                    int i = blk[a], j = blk[b];
                    if (!s1inv.at(i, j).is_zero() || !m.S2.at(i, j).is_zero()) {
                        ok = false;
                        w = "nonzero Stokes entry inside coalescence block at (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    }
                }
        }
        add("(9) coalescence vanishing", ok, w);
    }

    return rep;
}

ValidationReport validate_frobenius_flags(const MonodromyDatum& m) {
    ValidationReport rep;
    if (!m.eta) {
        rep.conditions.push_back({"frobenius flags", false, true, "no metric supplied"});
        return rep;
    }
    int n = m.n;
    bool lam0 = true;
    for (int i = 0; i < n; ++i) lam0 = lam0 && m.B.at(i, i).is_zero();
    rep.conditions.push_back({"Lambda = 0", lam0, true, lam0 ? "" : "nonzero formal monodromy"});

    bool st = m.S1.inverse() == m.S2.transpose();
    rep.conditions.push_back({"S1^{-1} = S2^T", st, true, st ? "" : "transpose identity fails"});

    // S1 = C^{-1} e^{-pi i R} e^{-pi i mu} eta^{-1} (C^{-1})^T
    {
        mpfr_prec_t bits = m.float_bits;
        ScalarMatrix r = m.r_matrix();
        std::vector<Scalar> mu = m.mu();
        CMatrix cinv = to_cmatrix(m.C, bits).inverse();
        // e^{-pi i R}: nilpotent, and e^{-pi i mu} diagonal
        BigFloat pi_v = BigFloat::pi(bits);
        CMatrix rexp(n, n, bits);
        {
            CMatrix x(n, n, bits);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    CFloat z = CFloat::from_scalar(r.at(i, j), bits);
                    x.at(i, j) = CFloat(pi_v * z.im, -(pi_v * z.re));  // -pi i z
                }
            rexp = x.exp();
        }
        CMatrix muexp(n, n, bits);
        for (int i = 0; i < n; ++i) {
            Scalar half_mu = Scalar(Rat(-1, 2)) * mu[static_cast<size_t>(i)];
            muexp.at(i, i) = CFloat::exp2pii(half_mu, bits);  // e^{-pi i mu_i}
        }
        CMatrix etainv = to_cmatrix(m.eta->inverse(), bits);
        CMatrix cinv_t(n, n, bits);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cinv_t.at(i, j) = cinv.at(j, i);
        CMatrix rhs = cinv * rexp * muexp * etainv * cinv_t;
        double d = CMatrix::rel_distance(rhs, to_cmatrix(m.S1, bits));
        rep.conditions.push_back({"Stokes-from-metric identity", d <= m.tol, false,
                                  d <= m.tol ? "" : "relative deviation " + std::to_string(d)});
    }
    return rep;
}

int moduli_dimension(int n, const std::string& kind) {
    if (n < 1) throw std::invalid_argument("moduli_dimension: n >= 1 required");
    if (kind == "flatF") return n * n;
    if (kind == "frobenius") return n * (n - 1) / 2;
    throw std::invalid_argument("moduli_dimension: kind must be flatF or frobenius");
}

}  // namespace orifold
