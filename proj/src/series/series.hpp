#ifndef ORIFOLD_SERIES_SERIES_HPP
#define ORIFOLD_SERIES_SERIES_HPP

#include "core/scalar.hpp"
#include "series/multiindex.hpp"

#include <map>
#include <vector>

namespace orifold {

// Truncated multivariate formal power series over Q(i).
//
// `order` is the truncation certificate: every coefficient of total degree
// <= order is stored exactly; nothing is claimed beyond it. Binary operations
// propagate the pessimistic min of the operand orders. An order of -1 means
// "no certified coefficients".
class FormalSeries {
public:
    FormalSeries() : nvars_(0), order_(-1) {}
    FormalSeries(int nvars, int order) : nvars_(nvars), order_(order) {}

    static FormalSeries zero(int nvars, int order) { return FormalSeries(nvars, order); }
    static FormalSeries constant(const Scalar& c, int nvars, int order);
    // The monomial t_var (0-based variable index).
    static FormalSeries variable(int var, int nvars, int order);
    static FormalSeries monomial(const Scalar& c, const MultiIndex& m, int order);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const MultiIndex& m) const;
    Scalar constant_term() const { return coeff(MultiIndex(nvars_)); }
    void set_coeff(const MultiIndex& m, const Scalar& c);

    // Degree of the highest stored term, -1 for the zero series.
    int top_degree() const;
    // Lowest degree with a nonzero stored coefficient, -1 for zero.
    int low_degree() const;

    const std::map<MultiIndex, Scalar>& terms() const { return terms_; }

    // Re-certify to a lower (or equal) order, dropping higher terms.
    FormalSeries truncated(int order) const;
    // Homogeneous part of the given degree (keeps the order certificate).
    FormalSeries homogeneous_part(int d) const;

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
    FormalSeries operator-() const;
    friend FormalSeries operator*(const Scalar& c, const FormalSeries& a);

    FormalSeries& operator+=(const FormalSeries& o) { return *this = *this + o; }
    FormalSeries& operator-=(const FormalSeries& o) { return *this = *this - o; }

    // Exact equality of stored terms up to min(order, o.order).
    bool equal_up_to_order(const FormalSeries& o) const;
    friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    // d/dt_var; result order drops by one.
    FormalSeries diff(int var) const;
    // Formal antiderivative in t_var with zero constant term; order rises by one.
    FormalSeries integrate(int var) const;

    // Multiplicative inverse; requires a nonzero constant term.
    FormalSeries inverse() const;
    // exp of a series with zero constant term.
    FormalSeries exp() const;
    // Substitution t_i := subs[i]; all subs must have zero constant term and
    // share nvars/order. Result certified to min(order, subs order).
    FormalSeries compose(const std::vector<FormalSeries>& subs) const;

    FormalSeries pow(int k) const;

    std::string str() const;

private:
    void prune();

    int nvars_;
    int order_;
    std::map<MultiIndex, Scalar> terms_;
};

// Path integral from 0 of the 1-form sum_i omega[i] dt_i, assuming closedness
// (not checked here); the primitive has zero constant term.
FormalSeries integrate_one_form(const std::vector<FormalSeries>& omega);

// Exact closedness check d(omega) == 0 up to the certified order.
bool one_form_closed(const std::vector<FormalSeries>& omega);

}  // namespace orifold

#endif
