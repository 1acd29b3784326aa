#ifndef ORIFOLD_ZSYSTEM_LOGLAURENT_HPP
#define ORIFOLD_ZSYSTEM_LOGLAURENT_HPP

#include "series/smatrix.hpp"

#include <map>

namespace orifold {

// Finite sums sum_{k,m} M_{k,m} z^k l^m with integer z-powers, l = log z
// (so d/dz l = 1/z), and matrix coefficients. Closed under sum, product and
// d/dz; z^R for nilpotent R expands as the l-polynomial sum_m R^m l^m / m!.
class LogLaurentSeries {
public:
    LogLaurentSeries() = default;
    LogLaurentSeries(int dim, int zmin, int zmax) : dim_(dim), zmin_(zmin), zmax_(zmax) {}

    static LogLaurentSeries identity(int dim, int zmin, int zmax);
    static LogLaurentSeries from_term(const ScalarMatrix& m, int zpow, int lpow, int zmin, int zmax);
    // z^R for nilpotent R.
    static LogLaurentSeries z_power_nilpotent(const ScalarMatrix& r, int zmin, int zmax);

    int dim() const { return dim_; }
    int zmin() const { return zmin_; }
    int zmax() const { return zmax_; }

    ScalarMatrix coeff(int zpow, int lpow) const;
    void add_term(int zpow, int lpow, const ScalarMatrix& m);

    bool is_zero() const { return terms_.empty(); }
    // True iff no l-powers appear and all z-powers are >= 0.
    bool is_polynomial() const;
    int max_lpow() const;

    friend LogLaurentSeries operator+(const LogLaurentSeries& a, const LogLaurentSeries& b);
    friend LogLaurentSeries operator-(const LogLaurentSeries& a, const LogLaurentSeries& b);
    friend LogLaurentSeries operator*(const LogLaurentSeries& a, const LogLaurentSeries& b);

    LogLaurentSeries diff_z() const;

    const std::map<std::pair<int, int>, ScalarMatrix>& terms() const { return terms_; }

private:
    void prune();
    int dim_ = 0;
    int zmin_ = 0, zmax_ = 0;  // certified z-window
    std::map<std::pair<int, int>, ScalarMatrix> terms_;
};

}  // namespace orifold

#endif
