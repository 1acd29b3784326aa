#include "cohft/correlator.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace orifold {

void CorrelatorTable::set(int upper, std::vector<int> lowers, const Scalar& value) {
    std::sort(lowers.begin(), lowers.end());
    if (value.is_zero())
        c_.erase({upper, lowers});
    else
        c_[{upper, std::move(lowers)}] = value;
}

Scalar CorrelatorTable::get(int upper, std::vector<int> lowers) const {
    if (static_cast<int>(lowers.size()) > max_points_)
        throw std::out_of_range("CorrelatorTable: valence beyond the table certificate");
    std::sort(lowers.begin(), lowers.end());
    auto it = c_.find({upper, lowers});
    return it == c_.end() ? Scalar() : it->second;
}

CorrelatorTable correlators_from_potential(const FlatFStructure& s, int max_points) {
    if (s.order() < max_points)
        throw std::domain_error("correlators_from_potential: potential order below max_points");
    int n = s.n();
    CorrelatorTable t(n, max_points);
    for (int a = 0; a < n; ++a) {
        for (const auto& [m, coeff] : s.potentials()[static_cast<size_t>(a)].terms()) {
            int deg = m.degree();
            if (deg < 2 || deg > max_points) continue;
            Rat fact(1);
            std::vector<int> lowers;
            for (int v = 0; v < n; ++v) {
                for (uint32_t k = 1; k <= m[v]; ++k) {
                    fact = fact * Rat(static_cast<long>(k));
                    lowers.push_back(v + 1);
                }
            }
            t.set(a + 1, lowers, Scalar(fact) * coeff);
        }
    }
    return t;
}

std::vector<FormalSeries> potential_from_correlators(const CorrelatorTable& t, int order) {
    int n = t.dim();
    std::vector<FormalSeries> out(static_cast<size_t>(n), FormalSeries::zero(n, order));
    for (const auto& [key, value] : t.entries()) {
        const auto& [upper, lowers] = key;
        MultiIndex m(n);
        Rat fact(1);
        for (int l : lowers) m[l - 1] += 1;
        for (int v = 0; v < n; ++v)
            for (uint32_t k = 1; k <= m[v]; ++k) fact = fact * Rat(static_cast<long>(k));
        if (m.degree() > order) continue;
        out[static_cast<size_t>(upper - 1)].set_coeff(m, Scalar(Rat(1) / fact) * value);
    }
    return out;
}

namespace {

// tree contraction by depth-first evaluation from the tail-1 vertex
Scalar eval_vertex(const StableTree& tree, const CorrelatorTable& t, int v, int in_half,
                   int up_index, const std::vector<int>& rho) {
    // collect fixed lower indices (tails except the distinguished inbound one)
    std::vector<int> lowers;
    std::vector<int> child_halves;
    for (int h : tree.half_edges_at(v)) {
        if (h == in_half) continue;
        int lbl = tree.tail_label(h);
        if (lbl == 1) continue;  // the output tail at the root
        if (lbl > 0)
            lowers.push_back(rho[static_cast<size_t>(lbl - 1)]);
        else
            child_halves.push_back(h);
    }
    int nc = static_cast<int>(child_halves.size());
    int dim = t.dim();
    // sum over saturated indices of the child edges
    std::vector<int> idx(static_cast<size_t>(nc), 1);
    Scalar total;
    for (;;) {
        std::vector<int> full = lowers;
        for (int k = 0; k < nc; ++k) full.push_back(idx[static_cast<size_t>(k)]);
        Scalar term = t.get(up_index, full);
        if (!term.is_zero()) {
            for (int k = 0; k < nc && !term.is_zero(); ++k) {
                int h = child_halves[static_cast<size_t>(k)];
                int hm = tree.mate(h);
                term *= eval_vertex(tree, t, tree.vertex_of(hm), hm, idx[static_cast<size_t>(k)], rho);
            }
            total += term;
        }
        int p = 0;
        while (p < nc) {
            if (++idx[static_cast<size_t>(p)] <= dim) break;
            idx[static_cast<size_t>(p)] = 1;
            ++p;
        }
        if (p == nc) break;
        if (nc == 0) break;
    }
    return total;
}

}  // namespace

Scalar evaluate_Y(const StableTree& tree, const std::vector<int>& rho, const CorrelatorTable& t) {
    if (static_cast<int>(rho.size()) != tree.ntails())
        throw std::invalid_argument("evaluate_Y: rho arity mismatch");
    int root = tree.vertex_of_tail(1);
    return eval_vertex(tree, t, root, -1, rho[0], rho);
}

RelationReport check_relation_preservation(const CorrelatorTable& t, int ntails, int max_edges,
                                           int workers) {
    RelationReport rep;
    int dim = t.dim();
    auto trees = enumerate_trees(ntails, max_edges);
    // all rho tuples
    std::vector<std::vector<int>> rhos;
    {
        std::vector<int> cur(static_cast<size_t>(ntails), 1);
        for (;;) {
            rhos.push_back(cur);
            int p = 0;
            while (p < ntails) {
                if (++cur[static_cast<size_t>(p)] <= dim) break;
                cur[static_cast<size_t>(p)] = 1;
                ++p;
            }
            if (p == ntails) break;
        }
    }
    struct Task {
        const StableTree* tree;
        ManinRelation rel;
        std::string key;
    };
    std::vector<Task> tasks;
    for (const auto& tree : trees) {
        for (int v = 0; v < tree.nvertices(); ++v) {
            std::vector<int> hs = tree.half_edges_at(v);
            if (hs.size() < 4) continue;
            // 4-subsets with the representative pairings (i fixed first)
            int deg = static_cast<int>(hs.size());
            std::vector<int> comb(4);
            std::vector<int> sel;
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == 4) {
                    int a = sel[0], b = sel[1], c = sel[2], d = sel[3];
                    // three pairings {ab|cd}, {ac|bd}, {ad|bc}
                    tasks.push_back({&tree, manin_relations(tree, v, a, b, c, d), tree.canonical_key()});
                    tasks.push_back({&tree, manin_relations(tree, v, a, c, b, d), tree.canonical_key()});
                    tasks.push_back({&tree, manin_relations(tree, v, a, d, b, c), tree.canonical_key()});
                    return;
                }
                for (int k = start; k < deg; ++k) {
                    sel.push_back(hs[static_cast<size_t>(k)]);
                    rec(k + 1, depth + 1);
                    sel.pop_back();
                }
            };
            rec(0, 0);
        }
    }

    std::vector<std::vector<RelationViolation>> found(static_cast<size_t>(std::max(workers, 1)));
    std::vector<long> counts(static_cast<size_t>(std::max(workers, 1)), 0);
    auto run_slice = [&](int w, int nw) {
        for (size_t ti = static_cast<size_t>(w); ti < tasks.size(); ti += static_cast<size_t>(nw)) {
            const Task& task = tasks[ti];
            for (const auto& rho : rhos) {
                Scalar lhs, rhs;
                for (const auto& tr : task.rel.primed) lhs += evaluate_Y(tr, rho, t);
                for (const auto& tr : task.rel.double_primed) rhs += evaluate_Y(tr, rho, t);
                ++counts[static_cast<size_t>(w)];
                if (lhs != rhs) {
                    std::string rs;
                    for (int x : rho) rs += std::to_string(x);
                    found[static_cast<size_t>(w)].push_back(
                        {task.key, rho, "Y mismatch " + lhs.str() + " != " + rhs.str() + " at rho=" + rs});
                }
            }
        }
    };
    int nw = std::max(workers, 1);
    if (nw == 1) {
        run_slice(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w) pool.emplace_back(run_slice, w, nw);
        for (auto& th : pool) th.join();
    }
    for (int w = 0; w < nw; ++w) {
        rep.checked += counts[static_cast<size_t>(w)];
        for (auto& vio : found[static_cast<size_t>(w)]) rep.violations.push_back(std::move(vio));
    }
    return rep;
}

ResidualReport homogeneity_genus0(const CorrelatorTable& t, const std::vector<Scalar>& q,
                                  const std::vector<Scalar>& r, const Scalar& gamma) {
    (void)gamma;  // enters only through the genus term, absent at g = 0
    ResidualReport rep;
    int dim = t.dim();
    // every multiset of lower indices with 2 <= m <= max_points - 1
    for (int m = 2; m + 1 <= t.max_points(); ++m) {
        std::vector<int> lowers(static_cast<size_t>(m), 1);
        for (;;) {
            for (int upper = 1; upper <= dim; ++upper) {
                Scalar lhs = -q[static_cast<size_t>(upper - 1)] - Scalar(m - 2);
                for (int l : lowers) lhs += q[static_cast<size_t>(l - 1)];
                lhs *= t.get(upper, lowers);
                Scalar rhs;
                for (int l = 1; l <= dim; ++l) {
                    std::vector<int> ext = lowers;
                    ext.push_back(l);
                    rhs += r[static_cast<size_t>(l - 1)] * t.get(upper, ext);
                }
                std::string label = "hg0(" + std::to_string(upper) + ";";
                for (int l : lowers) label += std::to_string(l);
                label += ")";
                FormalSeries res(1, 0);
                res.set_coeff(MultiIndex(1), lhs - rhs);
                rep.residuals.emplace_back(label, res);
            }
            // next nondecreasing tuple
            int p = m - 1;
            while (p >= 0 && lowers[static_cast<size_t>(p)] == dim) --p;
            if (p < 0) break;
            int v = ++lowers[static_cast<size_t>(p)];
            for (int k = p + 1; k < m; ++k) lowers[static_cast<size_t>(k)] = v;
        }
    }
    return rep;
}

}  // namespace orifold
