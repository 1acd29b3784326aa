#ifndef ORIFOLD_SERIES_MULTIINDEX_HPP
#define ORIFOLD_SERIES_MULTIINDEX_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace orifold {

// Exponent tuple of a monomial in n variables. Ordered by total degree first,
// then lexicographically (graded lex), which fixes the canonical iteration
// order of every series in the project.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int nvars) : e_(static_cast<size_t>(nvars), 0) {}
    explicit MultiIndex(std::vector<uint32_t> e) : e_(std::move(e)) {}

    static MultiIndex unit(int nvars, int var);  // e_var

    int nvars() const { return static_cast<int>(e_.size()); }
    uint32_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    uint32_t& operator[](int i) { return e_[static_cast<size_t>(i)]; }
    int degree() const {
        return static_cast<int>(std::accumulate(e_.begin(), e_.end(), uint32_t{0}));
    }

    MultiIndex plus(const MultiIndex& o) const;
    // Subtraction; returns false if any component would go negative.
    bool minus(const MultiIndex& o, MultiIndex& out) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e_ < b.e_;
    }

    const std::vector<uint32_t>& exponents() const { return e_; }

private:
    std::vector<uint32_t> e_;
};

// All multi-indices in nvars variables of total degree exactly d, in lex order.
std::vector<MultiIndex> monomials_of_degree(int nvars, int d);

}  // namespace orifold

#endif
