#ifndef ORIFOLD_SERIES_LINALG_HPP
#define ORIFOLD_SERIES_LINALG_HPP

#include "core/qipoly.hpp"
#include "series/smatrix.hpp"

#include <optional>
#include <vector>

namespace orifold {

// Solutions of the sparse exact linear system A x = b, A given as rows of
// (column, coefficient) pairs. Returns one solution, or nullopt when
// inconsistent; free variables are set to zero.
struct LinearSystem {
    int ncols = 0;
    struct Row {
        std::vector<std::pair<int, Scalar>> entries;
        Scalar rhs;
    };
    std::vector<Row> rows;

    void add_row(std::vector<std::pair<int, Scalar>> entries, Scalar rhs);
    std::optional<std::vector<Scalar>> solve() const;
    // Returns solution iff it is unique (no free variables), else nullopt.
    std::optional<std::vector<Scalar>> solve_unique() const;
};

// Nullspace basis of the dense homogeneous system (rows x cols).
std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& a, int cols);

// Characteristic polynomial det(x I - M) by the Faddeev-LeVerrier recursion.
QiPoly char_poly(const ScalarMatrix& m);

// Eigen decomposition of a matrix with n distinct eigenvalues in Q(i):
// eigenvalues plus Lagrange spectral projectors P_i = prod_{j!=i}(M-l_j)/(l_i-l_j).
struct SimpleSpectrum {
    std::vector<Scalar> eigenvalues;
    std::vector<ScalarMatrix> projectors;
};
std::optional<SimpleSpectrum> simple_spectrum(const ScalarMatrix& m);

}  // namespace orifold

#endif
