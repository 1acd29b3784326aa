#include "cohft/tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orifold {

StableTree StableTree::corolla(int ntails) {
    StableTree t;
    int v = t.add_vertex();
    for (int l = 1; l <= ntails; ++l) t.add_tail(v, l);
    return t;
}

int StableTree::add_vertex() { return nvert_++; }

int StableTree::add_tail(int v, int label) {
    vertex_of_.push_back(v);
    mate_.push_back(-1);
    label_.push_back(label);
    ntails_ = std::max(ntails_, label);
    return nhalf() - 1;
}

void StableTree::add_edge(int v, int w) {
    int first = nhalf();
    vertex_of_.push_back(v);
    mate_.push_back(first + 1);
    label_.push_back(0);
    vertex_of_.push_back(w);
    mate_.push_back(first);
    label_.push_back(0);
}

std::vector<int> StableTree::half_edges_at(int v) const {
    std::vector<int> out;
    for (int h = 0; h < nhalf(); ++h)
        if (vertex_of_[static_cast<size_t>(h)] == v) out.push_back(h);
    return out;
}

bool StableTree::stable() const {
    for (int v = 0; v < nvert_; ++v)
        if (valence(v) < 3) return false;
    return true;
}

int StableTree::vertex_of_tail(int label) const {
    for (int h = 0; h < nhalf(); ++h)
        if (label_[static_cast<size_t>(h)] == label) return vertex_of_[static_cast<size_t>(h)];
    throw std::out_of_range("StableTree: missing tail label");
}

StableTree StableTree::split_vertex(int v, const std::vector<int>& side_a) const {
    StableTree t(*this);
    int b = t.add_vertex();  // new vertex; side_a stays at v, the rest moves to b
    std::set<int> keep(side_a.begin(), side_a.end());
    for (int h : half_edges_at(v))
        if (!keep.count(h)) t.vertex_of_[static_cast<size_t>(h)] = b;
    t.add_edge(v, b);
    return t;
}

uint64_t StableTree::edge_partition(int half) const {
    int m = mate_[static_cast<size_t>(half)];
    if (m < 0) throw std::invalid_argument("edge_partition: tail half-edge");
    // collect tails reachable from the `half` side without crossing the edge
    std::vector<bool> seen(static_cast<size_t>(nvert_), false);
    std::vector<int> stack{vertex_of_[static_cast<size_t>(half)]};
    seen[static_cast<size_t>(stack[0])] = true;
    uint64_t mask = 0;
    bool has_one = false;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : half_edges_at(v)) {
            if (h == half && vertex_of_[static_cast<size_t>(h)] == v) continue;
            if (label_[static_cast<size_t>(h)] > 0) {
                mask |= uint64_t{1} << label_[static_cast<size_t>(h)];
                if (label_[static_cast<size_t>(h)] == 1) has_one = true;
                continue;
            }
            int hm = mate_[static_cast<size_t>(h)];
            if (h == half || hm == half) continue;  // do not cross the cut edge
            int w = vertex_of_[static_cast<size_t>(hm)];
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    if (!has_one) return mask;
    // return the complement side (canonical: the side without tail 1)
    uint64_t all = 0;
    for (int l = 1; l <= ntails_; ++l) all |= uint64_t{1} << l;
    return all & ~mask;
}

std::vector<uint64_t> StableTree::good_monomial() const {
    std::vector<uint64_t> out;
    for (int h = 0; h < nhalf(); ++h)
        if (mate_[static_cast<size_t>(h)] > h) out.push_back(edge_partition(h));
    std::sort(out.begin(), out.end());
    return out;
}

static std::string canon_rec(const StableTree& t, int v, int from_half) {
    std::vector<std::string> parts;
    for (int h : t.half_edges_at(v)) {
        if (h == from_half) continue;
        if (t.tail_label(h) > 0) {
            parts.push_back("t" + std::to_string(t.tail_label(h)));
        } else {
            int hm = t.mate(h);
            parts.push_back("(" + canon_rec(t, t.vertex_of(hm), hm) + ")");
        }
    }
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += p;
    return s;
}

std::string StableTree::canonical_key() const {
    int root = vertex_of_tail(1);
    return canon_rec(*this, root, -1);
}

std::vector<StableTree> enumerate_trees(int ntails, int max_edges) {
    if (ntails < 3) throw std::invalid_argument("enumerate_trees: at least 3 tails required");
    std::vector<StableTree> all;
    std::set<std::string> seen;
    std::vector<StableTree> frontier{StableTree::corolla(ntails)};
    all.push_back(frontier[0]);
    seen.insert(frontier[0].canonical_key());
    for (int e = 1; e <= max_edges; ++e) {
        std::vector<StableTree> next;
        for (const auto& t : frontier) {
            for (int v = 0; v < t.nvertices(); ++v) {
                std::vector<int> hs = t.half_edges_at(v);
                int deg = static_cast<int>(hs.size());
                if (deg < 4) continue;
                // enumerate subsets keeping >= 2 on each side; fix hs[0] on
                // side A to halve the symmetric double count
                for (uint32_t mask = 0; mask < (uint32_t{1} << (deg - 1)); ++mask) {
                    std::vector<int> side_a{hs[0]};
                    for (int k = 1; k < deg; ++k)
                        if (mask & (uint32_t{1} << (k - 1))) side_a.push_back(hs[static_cast<size_t>(k)]);
                    int asz = static_cast<int>(side_a.size());
                    if (asz < 2 || deg - asz < 2) continue;
                    StableTree s = t.split_vertex(v, side_a);
                    std::string key = s.canonical_key();
                    if (seen.insert(key).second) {
                        next.push_back(s);
                        all.push_back(s);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const StableTree& a, const StableTree& b) {
        if (a.nedges() != b.nedges()) return a.nedges() < b.nedges();
        return a.canonical_key() < b.canonical_key();
    });
    return all;
}

ManinRelation manin_relations(const StableTree& tree, int v, int hi, int hj, int hk, int hl) {
    std::vector<int> hs = tree.half_edges_at(v);
    if (static_cast<int>(hs.size()) < 4)
        throw std::invalid_argument("manin_relations: vertex valence < 4");
    for (int h : {hi, hj, hk, hl}) {
        bool found = false;
        for (int x : hs) found = found || x == h;
        if (!found) throw std::invalid_argument("manin_relations: half-edge not at vertex");
    }
    std::vector<int> rest;
    for (int h : hs)
        if (h != hi && h != hj && h != hk && h != hl) rest.push_back(h);
    int t = static_cast<int>(rest.size());
    ManinRelation rel;
    for (uint32_t mask = 0; mask < (uint32_t{1} << t); ++mask) {
        std::vector<int> t1;
        for (int k = 0; k < t; ++k)
            if (mask & (uint32_t{1} << k)) t1.push_back(rest[static_cast<size_t>(k)]);
        {
            std::vector<int> side{hi, hj};
            side.insert(side.end(), t1.begin(), t1.end());
            rel.primed.push_back(tree.split_vertex(v, side));
        }
        {
            std::vector<int> side{hk, hj};
            side.insert(side.end(), t1.begin(), t1.end());
            rel.double_primed.push_back(tree.split_vertex(v, side));
        }
    }
    return rel;
}

}  // namespace orifold
