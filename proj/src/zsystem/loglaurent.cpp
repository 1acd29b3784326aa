#include "zsystem/loglaurent.hpp"

#include <stdexcept>

namespace orifold {

LogLaurentSeries LogLaurentSeries::identity(int dim, int zmin, int zmax) {
    LogLaurentSeries s(dim, zmin, zmax);
    s.add_term(0, 0, ScalarMatrix::identity(dim));
    return s;
}

LogLaurentSeries LogLaurentSeries::from_term(const ScalarMatrix& m, int zpow, int lpow, int zmin,
                                             int zmax) {
    LogLaurentSeries s(m.rows(), zmin, zmax);
    s.add_term(zpow, lpow, m);
    return s;
}

LogLaurentSeries LogLaurentSeries::z_power_nilpotent(const ScalarMatrix& r, int zmin, int zmax) {
    int n = r.rows();
    LogLaurentSeries s(n, zmin, zmax);
    ScalarMatrix pw = ScalarMatrix::identity(n);
    Rat fact(1);
    for (int m = 0; m <= n; ++m) {
        if (m > 0) {
            pw = pw * r;
            fact = fact * Rat(m);
        }
        if (pw.is_zero()) break;
        s.add_term(0, m, Scalar(Rat(1) / fact) * pw);
    }
    return s;
}

ScalarMatrix LogLaurentSeries::coeff(int zpow, int lpow) const {
    auto it = terms_.find({zpow, lpow});
    if (it != terms_.end()) return it->second;
    return ScalarMatrix(dim_, dim_);
}

void LogLaurentSeries::add_term(int zpow, int lpow, const ScalarMatrix& m) {
    if (zpow < zmin_ || zpow > zmax_) return;  // outside certified window
    if (m.is_zero()) return;
    auto it = terms_.find({zpow, lpow});
    if (it == terms_.end())
        terms_[{zpow, lpow}] = m;
    else {
        it->second = it->second + m;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LogLaurentSeries::is_polynomial() const {
    for (const auto& [k, m] : terms_)
        if (k.second > 0 || k.first < 0) return false;
    return true;
}

int LogLaurentSeries::max_lpow() const {
    int l = 0;
    for (const auto& [k, m] : terms_) l = std::max(l, k.second);
    return l;
}

void LogLaurentSeries::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || it->first.first < zmin_ || it->first.first > zmax_)
            it = terms_.erase(it);
        else
            ++it;
    }
}

LogLaurentSeries operator+(const LogLaurentSeries& a, const LogLaurentSeries& b) {
    LogLaurentSeries r(a.dim_, std::max(a.zmin_, b.zmin_), std::min(a.zmax_, b.zmax_));
    for (const auto& [k, m] : a.terms_) r.add_term(k.first, k.second, m);
    for (const auto& [k, m] : b.terms_) r.add_term(k.first, k.second, m);
    return r;
}

LogLaurentSeries operator-(const LogLaurentSeries& a, const LogLaurentSeries& b) {
    LogLaurentSeries r(a.dim_, std::max(a.zmin_, b.zmin_), std::min(a.zmax_, b.zmax_));
    for (const auto& [k, m] : a.terms_) r.add_term(k.first, k.second, m);
    for (const auto& [k, m] : b.terms_) r.add_term(k.first, k.second, -m);
    return r;
}

LogLaurentSeries operator*(const LogLaurentSeries& a, const LogLaurentSeries& b) {
    // the product of terms certified on [amin, amax] and [bmin, bmax] is
    // certified where every contributing pair is inside its window
    LogLaurentSeries r(a.dim_, a.zmin_ + b.zmin_, std::min(a.zmax_ + b.zmin_, a.zmin_ + b.zmax_));
    for (const auto& [ka, ma] : a.terms_)
        for (const auto& [kb, mb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ma * mb);
    return r;
}

LogLaurentSeries LogLaurentSeries::diff_z() const {
    LogLaurentSeries r(dim_, zmin_ - 1, zmax_ - 1);
    for (const auto& [k, m] : terms_) {
        if (k.first != 0) r.add_term(k.first - 1, k.second, Scalar(k.first) * m);
        if (k.second > 0) r.add_term(k.first - 1, k.second - 1, Scalar(k.second) * m);
    }
    return r;
}

}  // namespace orifold
