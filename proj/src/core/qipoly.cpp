#include "core/qipoly.hpp"

#include <cmath>
#include <complex>

namespace orifold {

int QiPoly::degree() const {
    for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d)
        if (!c[static_cast<size_t>(d)].is_zero()) return d;
    return -1;
}

Scalar QiPoly::eval(const Scalar& x) const {
    Scalar r;
    for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) r = r * x + c[static_cast<size_t>(d)];
    return r;
}

QiPoly QiPoly::derivative() const {
    QiPoly d;
    for (size_t k = 1; k < c.size(); ++k) d.c.push_back(Scalar(Rat(static_cast<long>(k))) * c[k]);
    d.normalize();
    return d;
}

void QiPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

QiPoly poly_mul(const QiPoly& a, const QiPoly& b) {
    QiPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Scalar());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

QiPoly poly_rem(QiPoly a, const QiPoly& b) {
    a.normalize();
    int db = b.degree();
    if (db < 0) throw std::domain_error("poly_rem: division by zero polynomial");
    Scalar lead = b.c[static_cast<size_t>(db)];
    while (a.degree() >= db) {
        int da = a.degree();
        Scalar f = a.c[static_cast<size_t>(da)] / lead;
        for (int k = 0; k <= db; ++k)
            a.c[static_cast<size_t>(da - db + k)] -= f * b.c[static_cast<size_t>(k)];
        a.normalize();
    }
    return a;
}

QiPoly poly_gcd(QiPoly a, QiPoly b) {
    a.normalize();
    b.normalize();
    while (b.degree() >= 0) {
        QiPoly r = poly_rem(a, b);
        a = b;
        b = r;
    }
    // monic normalization for determinism
    int d = a.degree();
    if (d >= 0) {
        Scalar lead = a.c[static_cast<size_t>(d)];
        for (auto& x : a.c) x = x / lead;
    }
    return a;
}

QiPoly poly_deflate(const QiPoly& p, const Scalar& r) {
    int d = p.degree();
    QiPoly q;
    if (d <= 0) return q;
    q.c.assign(static_cast<size_t>(d), Scalar());
    Scalar carry = p.c[static_cast<size_t>(d)];
    for (int k = d - 1; k >= 0; --k) {
        q.c[static_cast<size_t>(k)] = carry;
        carry = p.c[static_cast<size_t>(k)] + carry * r;
    }
    if (!carry.is_zero()) throw std::domain_error("poly_deflate: not a root");
    q.normalize();
    return q;
}

bool poly_squarefree(const QiPoly& p) {
    QiPoly g = poly_gcd(p, p.derivative());
    return g.degree() <= 0;
}

std::optional<Rat> rationalize(double x, double tol, long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued fraction expansion
    long p0 = 1, q0 = 0;  // h_{-1}, k_{-1}
    double v = x;
    long p1 = static_cast<long>(std::floor(v)), q1 = 1;
    v -= std::floor(v);
    for (int it = 0; it < 40; ++it) {
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) return rat(p1, q1);
        if (v < 1e-18) break;
        v = 1.0 / v;
        if (v > 9e18) break;
        long a = static_cast<long>(std::floor(v));
        v -= std::floor(v);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (q1 > 0 && std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) return rat(p1, q1);
    return std::nullopt;
}

std::optional<std::vector<Scalar>> qi_roots_distinct(const QiPoly& p) {
    int deg = p.degree();
    if (deg < 0) return std::nullopt;
    if (deg == 0) return std::vector<Scalar>{};

    // numeric root localization (Durand-Kerner)
    std::vector<std::complex<double>> a(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        const Scalar& s = k < static_cast<int>(p.c.size()) ? p.c[static_cast<size_t>(k)] : Scalar();
        a[static_cast<size_t>(k)] = {s.re().to_double(), s.im().to_double()};
    }
    for (int k = 0; k <= deg; ++k) a[static_cast<size_t>(k)] /= a[static_cast<size_t>(deg)];
    auto evald = [&](std::complex<double> z) {
        std::complex<double> r = 0;
        for (int k = deg; k >= 0; --k) r = r * z + a[static_cast<size_t>(k)];
        return r;
    };
    std::vector<std::complex<double>> roots(static_cast<size_t>(deg));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = 1.0;
    for (int k = 0; k < deg; ++k) {
        roots[static_cast<size_t>(k)] = w;
        w *= seed;
    }
    for (int it = 0; it < 500; ++it) {
        double delta = 0;
        for (int k = 0; k < deg; ++k) {
            std::complex<double> d = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != k) d *= (roots[static_cast<size_t>(k)] - roots[static_cast<size_t>(j)]);
            if (std::abs(d) < 1e-300) continue;
            std::complex<double> corr = evald(roots[static_cast<size_t>(k)]) / d;
            roots[static_cast<size_t>(k)] -= corr;
            delta = std::max(delta, std::abs(corr));
        }
        if (delta < 1e-14) break;
    }

    // exact verification + deflation
    QiPoly rem = p;
    std::vector<Scalar> out;
    for (int k = 0; k < deg; ++k) {
        const auto& z = roots[static_cast<size_t>(k)];
        bool ok = false;
        for (double tol : {1e-12, 1e-9, 1e-6}) {
            auto re = rationalize(z.real(), tol);
            auto im = rationalize(z.imag(), tol);
            if (!re || !im) continue;
            Scalar cand(*re, *im);
            if (rem.eval(cand).is_zero()) {
                out.push_back(cand);
                rem = poly_deflate(rem, cand);
                ok = true;
                break;
            }
        }
        if (!ok) return std::nullopt;
    }
    if (rem.degree() != 0) return std::nullopt;
    return out;
}

}  // namespace orifold
