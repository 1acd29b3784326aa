#ifndef ORIFOLD_COHFT_TREE_HPP
#define ORIFOLD_COHFT_TREE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orifold {

// Stable tree with labeled tails, stored with explicit half-edge structure:
// vertex assignment and mate involution; tails are fixed points of the
// involution and carry labels 1..n.
class StableTree {
public:
    // one-vertex tree with tails 1..n
    static StableTree corolla(int ntails);

    int nvertices() const { return nvert_; }
    int nhalf() const { return static_cast<int>(vertex_of_.size()); }
    int ntails() const { return ntails_; }
    int nedges() const { return nvert_ - 1; }

    int vertex_of(int h) const { return vertex_of_[static_cast<size_t>(h)]; }
    int mate(int h) const { return mate_[static_cast<size_t>(h)]; }       // -1 for tails
    int tail_label(int h) const { return label_[static_cast<size_t>(h)]; }  // 0 unless tail

    std::vector<int> half_edges_at(int v) const;
    int valence(int v) const { return static_cast<int>(half_edges_at(v).size()); }
    bool stable() const;
    int vertex_of_tail(int label) const;

    // Splits vertex v into an edge: the half-edges in side_a stay at the new
    // vertex A, the rest at B; both sides gain one half of the new edge.
    // Every half-edge of v must be listed at most once and belong to v.
    StableTree split_vertex(int v, const std::vector<int>& side_a) const;

    // Stable 2-partition cut by an edge (given by one of its half-edges):
    // bitmask over tail labels of the side NOT containing tail 1.
    uint64_t edge_partition(int half) const;
    // Good monomial: sorted multiset of edge partitions.
    std::vector<uint64_t> good_monomial() const;

    // Canonical isomorphism key (rooted at the tail-1 vertex, children
    // sorted); equal keys == isomorphic as tail-labeled trees.
    std::string canonical_key() const;

    // construction helpers
    int add_vertex();
    int add_tail(int v, int label);
    void add_edge(int v, int w);

private:
    int nvert_ = 0;
    int ntails_ = 0;
    std::vector<int> vertex_of_;
    std::vector<int> mate_;
    std::vector<int> label_;
};

// All isomorphism classes of stable trees with tails 1..ntails and at most
// max_edges edges, deduplicated by canonical key, deterministic order.
std::vector<StableTree> enumerate_trees(int ntails, int max_edges);

// Manin relation data: trees tau'(alpha) and tau''(alpha) over all ordered
// 2-partitions of the residual half-edges at v.
struct ManinRelation {
    std::vector<StableTree> primed;         // {i,j} | {k,l} splits
    std::vector<StableTree> double_primed;  // {k,j} | {i,l} splits
};
ManinRelation manin_relations(const StableTree& tree, int v, int hi, int hj, int hk, int hl);

}  // namespace orifold

#endif
