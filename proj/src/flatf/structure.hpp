#ifndef ORIFOLD_FLATF_STRUCTURE_HPP
#define ORIFOLD_FLATF_STRUCTURE_HPP

#include "series/linalg.hpp"
#include "series/smatrix.hpp"

#include <optional>
#include <vector>

namespace orifold {

struct EulerData {
    std::vector<Scalar> q;  // E = sum ((1-q_a) t^a + r^a) d_a
    std::vector<Scalar> r;
};

// Vector potential structure: n potentials F^a in n variables, flat unit
// e = A^mu d_mu, optional Euler data, and the normalization shift lambda.
class FlatFStructure {
public:
    FlatFStructure() = default;
    FlatFStructure(std::vector<FormalSeries> potentials, std::vector<Scalar> unit,
                   std::optional<EulerData> euler = std::nullopt, Scalar lambda = Scalar());

    int n() const { return n_; }
    int order() const { return order_; }
    const std::vector<FormalSeries>& potentials() const { return potentials_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const std::optional<EulerData>& euler() const { return euler_; }
    const Scalar& lambda() const { return lambda_; }

    // Structure-constant matrices: c_matrix(b)^a_g = d_b d_g F^a.
    const SeriesMatrix& c_matrix(int beta) const;
    // Euler field components E^a(t) as series.
    std::vector<FormalSeries> euler_field() const;
    // Operator U = E o : U^b_a = E^eps c^b_{a eps}.
    SeriesMatrix u_operator() const;
    // mu^lambda diagonal entries q_a - lambda.
    std::vector<Scalar> mu_lambda() const;

private:
    int n_ = 0;
    int order_ = -1;
    std::vector<FormalSeries> potentials_;
    std::vector<Scalar> unit_;
    std::optional<EulerData> euler_;
    Scalar lambda_;
    mutable std::vector<SeriesMatrix> c_cache_;
};

struct ResidualReport {
    // Labeled residual series; a structure is accepted iff all are zero.
    std::vector<std::pair<std::string, FormalSeries>> residuals;
    bool all_zero() const;
    // Lowest degree with a nonzero residual coefficient, -1 when clean.
    int first_failing_order() const;
    std::vector<std::string> failing_labels() const;
};

// Oriented-associativity residuals: the unit equations
// A^mu d2 F^a / dt^mu dt^b - delta^a_b and the associativity commutators.
ResidualReport oa_residual(const FlatFStructure& s);

// Homogeneity residuals E^mu d_mu F^a - (2 - q_a) F^a, reduced modulo
// affine-linear terms in t. Requires Euler data.
ResidualReport euler_residual(const FlatFStructure& s);

struct FrobeniusMetric {
    // Basis of the solution space of the constant symmetric metric equations.
    std::vector<ScalarMatrix> basis;
    // A nondegenerate representative, when one exists.
    std::optional<ScalarMatrix> nondegenerate;
};
FrobeniusMetric frobenius_metric(const FlatFStructure& s);

// Finest partition of {0..n-1} such that gamma_tilde is supported inside
// blocks; the entries of c refine the partition exactly when they coincide.
std::vector<std::vector<int>> irreducible_blocks(const SeriesMatrix& gamma_tilde,
                                                 const std::vector<Scalar>& c);

}  // namespace orifold

#endif
