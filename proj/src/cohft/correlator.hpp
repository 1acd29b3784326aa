#ifndef ORIFOLD_COHFT_CORRELATOR_HPP
#define ORIFOLD_COHFT_CORRELATOR_HPP

#include "cohft/tree.hpp"
#include "flatf/structure.hpp"

namespace orifold {

// Correlator numbers c^a_{r1...rm}, symmetric in the lower indices; keyed by
// the upper index and the sorted lower multiset.
class CorrelatorTable {
public:
    CorrelatorTable() = default;
    CorrelatorTable(int dim, int max_points) : dim_(dim), max_points_(max_points) {}

    int dim() const { return dim_; }
    int max_points() const { return max_points_; }

    void set(int upper, std::vector<int> lowers, const Scalar& value);
    // Throws when the requested valence exceeds the table certificate.
    Scalar get(int upper, std::vector<int> lowers) const;

    const std::map<std::pair<int, std::vector<int>>, Scalar>& entries() const { return c_; }

private:
    int dim_ = 0;
    int max_points_ = 0;
    std::map<std::pair<int, std::vector<int>>, Scalar> c_;
};

// Taylor extraction: c^a_(m) = coeff_m(F^a) * prod m_i! for 2 <= |m| <= max_points.
CorrelatorTable correlators_from_potential(const FlatFStructure& s, int max_points);

// Re-summation of the potentials from the table (round-trip check).
std::vector<FormalSeries> potential_from_correlators(const CorrelatorTable& t, int order);

// Tensor contraction over the tree, tail l carrying index rho[l-1] (1-based
// values in 1..dim); the distinguished tail 1 is the output index.
Scalar evaluate_Y(const StableTree& tree, const std::vector<int>& rho, const CorrelatorTable& t);

struct RelationViolation {
    std::string tree_key;
    std::vector<int> rho;
    std::string detail;
};
struct RelationReport {
    long checked = 0;
    std::vector<RelationViolation> violations;
    bool pass() const { return violations.empty(); }
};

// Preservation of every Manin relation (Keel's in codimension one) by Y_rho
// for all trees with <= max_edges edges, all eligible (v,i,j,k,l), and all
// rho tuples; `workers` > 1 splits the rho loop across threads.
RelationReport check_relation_preservation(const CorrelatorTable& t, int ntails, int max_edges,
                                           int workers = 1);

// Genus-0 homogeneity constraints on correlators, equivalent to (hEF):
// (sum_i q_{rho_i} - q_{rho_0} - m + 2) c^{rho_0}_{rho} = sum_l r^l c^{rho_0}_{rho l}.
// gamma enters only in positive genus and is ignored (reported as such).
ResidualReport homogeneity_genus0(const CorrelatorTable& t, const std::vector<Scalar>& q,
                                  const std::vector<Scalar>& r, const Scalar& gamma);

}  // namespace orifold

#endif
