#include "series/multiindex.hpp"

namespace orifold {

MultiIndex MultiIndex::unit(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::out_of_range("MultiIndex: variable index");
    MultiIndex m(nvars);
    m[var] = 1;
    return m;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
    MultiIndex r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool MultiIndex::minus(const MultiIndex& o, MultiIndex& out) const {
    out = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (out.e_[i] < o.e_[i]) return false;
        out.e_[i] -= o.e_[i];
    }
    return true;
}

static void rec(int nvars, int pos, int left, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos == nvars - 1) {
        cur[pos] = static_cast<uint32_t>(left);
        out.push_back(cur);
        return;
    }
    for (int k = left; k >= 0; --k) {
        cur[pos] = static_cast<uint32_t>(k);
        rec(nvars, pos + 1, left - k, cur, out);
    }
}

std::vector<MultiIndex> monomials_of_degree(int nvars, int d) {
    std::vector<MultiIndex> out;
    if (nvars <= 0) return out;
    MultiIndex cur(nvars);
    rec(nvars, 0, d, cur, out);
    return out;
}

}  // namespace orifold
