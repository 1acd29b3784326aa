#include "series/series.hpp"

#include <sstream>
#include <stdexcept>

namespace orifold {

FormalSeries FormalSeries::constant(const Scalar& c, int nvars, int order) {
    FormalSeries s(nvars, order);
    s.set_coeff(MultiIndex(nvars), c);
    return s;
}

FormalSeries FormalSeries::variable(int var, int nvars, int order) {
    FormalSeries s(nvars, order);
    s.set_coeff(MultiIndex::unit(nvars, var), Scalar(1));
    return s;
}

FormalSeries FormalSeries::monomial(const Scalar& c, const MultiIndex& m, int order) {
    FormalSeries s(m.nvars(), order);
    s.set_coeff(m, c);
    return s;
}

Scalar FormalSeries::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void FormalSeries::set_coeff(const MultiIndex& m, const Scalar& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("FormalSeries: nvars mismatch");
    if (m.degree() > order_) {
        if (c.is_zero()) return;
        throw std::out_of_range("FormalSeries: coefficient beyond truncation order");
    }
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

int FormalSeries::top_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int FormalSeries::low_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

void FormalSeries::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || it->first.degree() > order_)
            it = terms_.erase(it);
        else
            ++it;
    }
}

FormalSeries FormalSeries::truncated(int order) const {
    FormalSeries r(nvars_, std::min(order, order_));
    for (const auto& [m, c] : terms_)
        if (m.degree() <= r.order_) r.terms_[m] = c;
    return r;
}

FormalSeries FormalSeries::homogeneous_part(int d) const {
    FormalSeries r(nvars_, order_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_[m] = c;
    return r;
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("FormalSeries: nvars mismatch");
    FormalSeries r(a.nvars_, std::min(a.order_, b.order_));
    r.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end())
            r.terms_[m] = c;
        else
            it->second += c;
    }
    r.prune();
    return r;
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return a + (-b); }

FormalSeries FormalSeries::operator-() const {
    FormalSeries r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

FormalSeries operator*(const Scalar& c, const FormalSeries& a) {
    FormalSeries r(a.nvars_, a.order_);
    if (c.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("FormalSeries: nvars mismatch");
    FormalSeries r(a.nvars_, std::min(a.order_, b.order_));
    for (const auto& [ma, ca] : a.terms_) {
        int da = ma.degree();
        if (da > r.order_) break;
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mb.degree() > r.order_) break;
            MultiIndex m = ma.plus(mb);
            auto it = r.terms_.find(m);
            if (it == r.terms_.end())
                r.terms_[m] = ca * cb;
            else
                it->second += ca * cb;
        }
    }
    r.prune();
    return r;
}

bool FormalSeries::equal_up_to_order(const FormalSeries& o) const {
    int k = std::min(order_, o.order_);
    FormalSeries d = *this - o;
    for (const auto& [m, c] : d.terms_)
        if (m.degree() <= k && !c.is_zero()) return false;
    return true;
}

FormalSeries FormalSeries::diff(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("FormalSeries: variable index");
    FormalSeries r(nvars_, order_ >= 0 ? order_ - 1 : -1);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        MultiIndex d = m;
        long e = d[var];
        d[var] -= 1;
        if (d.degree() > r.order_) continue;
        r.terms_[d] = Scalar(Rat(e)) * c;
    }
    r.prune();
    return r;
}

FormalSeries FormalSeries::integrate(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("FormalSeries: variable index");
    FormalSeries r(nvars_, order_ + 1);
    for (const auto& [m, c] : terms_) {
        MultiIndex u = m;
        u[var] += 1;
        r.terms_[u] = Scalar(Rat(1, static_cast<long>(u[var]))) * c;
    }
    r.prune();
    return r;
}

FormalSeries FormalSeries::inverse() const {
    Scalar c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("FormalSeries: inverse needs nonzero constant term");
    // 1/(c0 (1 + s)) = (1/c0) sum (-s)^k,  s = (this - c0)/c0
    Scalar ic0 = c0.inv();
    FormalSeries s = ic0 * (*this - constant(c0, nvars_, order_));
    FormalSeries acc = constant(ic0, nvars_, order_);
    FormalSeries powk = constant(Scalar(1), nvars_, order_);
    for (int k = 1; k <= order_; ++k) {
        powk = powk * s;
        if (powk.is_zero()) break;
        acc = acc + (k % 2 == 1 ? -Scalar(1) : Scalar(1)) * ic0 * powk;
    }
    return acc;
}

FormalSeries FormalSeries::exp() const {
    if (!constant_term().is_zero())
        throw std::domain_error("FormalSeries: exp needs zero constant term");
    FormalSeries acc = constant(Scalar(1), nvars_, order_);
    FormalSeries powk = constant(Scalar(1), nvars_, order_);
    Rat fact(1);
    for (int k = 1; k <= order_; ++k) {
        powk = powk * (*this);
        if (powk.is_zero()) break;
        fact = fact * Rat(k);
        acc = acc + Scalar(Rat(1) / fact) * powk;
    }
    return acc;
}

FormalSeries FormalSeries::pow(int k) const {
    FormalSeries r = constant(Scalar(1), nvars_, order_);
    for (int j = 0; j < k; ++j) r = r * (*this);
    return r;
}

FormalSeries FormalSeries::compose(const std::vector<FormalSeries>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_)
        throw std::invalid_argument("FormalSeries: compose arity mismatch");
    int out_vars = nvars_ == 0 ? 0 : subs[0].nvars();
    int out_order = order_;
    for (const auto& s : subs) {
        if (!s.constant_term().is_zero())
            throw std::domain_error("FormalSeries: compose needs zero constant terms");
        out_order = std::min(out_order, s.order());
        if (s.nvars() != out_vars) throw std::invalid_argument("FormalSeries: compose nvars");
    }
    // power cache per variable
    std::vector<std::vector<FormalSeries>> pows(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i)
        pows[static_cast<size_t>(i)].push_back(FormalSeries::constant(Scalar(1), out_vars, out_order));
    auto power = [&](int i, uint32_t k) -> const FormalSeries& {
        auto& v = pows[static_cast<size_t>(i)];
        while (v.size() <= k) v.push_back(v.back() * subs[static_cast<size_t>(i)].truncated(out_order));
        return v[k];
    };
    FormalSeries r(out_vars, out_order);
    for (const auto& [m, c] : terms_) {
        if (m.degree() > out_order) continue;
        FormalSeries term = FormalSeries::constant(c, out_vars, out_order);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) term = term * power(i, m[i]);
        r = r + term;
    }
    return r;
}

std::string FormalSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) {
                os << "*t" << (i + 1);
                if (m[i] > 1) os << "^" << m[i];
            }
    }
    return os.str();
}

FormalSeries integrate_one_form(const std::vector<FormalSeries>& omega) {
    int n = static_cast<int>(omega.size());
    if (n == 0) return FormalSeries();
    int nv = omega[0].nvars();
    int ord = omega[0].order();
    for (const auto& w : omega) ord = std::min(ord, w.order());
    FormalSeries f(nv, ord + 1);
    // f(t) = int_0^1 sum_i omega_i(s t) t_i ds: the monomial m in omega_i
    // contributes coeff * t^{m+e_i} / (|m|+1).
    for (int i = 0; i < n; ++i) {
        for (const auto& [m, c] : omega[static_cast<size_t>(i)].terms()) {
            if (m.degree() > ord) continue;
            MultiIndex u = m;
            u[i] += 1;
            Scalar add = Scalar(Rat(1, m.degree() + 1)) * c;
            f.set_coeff(u, f.coeff(u) + add);
        }
    }
    return f;
}

bool one_form_closed(const std::vector<FormalSeries>& omega) {
    int n = static_cast<int>(omega.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            FormalSeries d = omega[static_cast<size_t>(i)].diff(j) - omega[static_cast<size_t>(j)].diff(i);
            if (!d.is_zero()) return false;
        }
    return true;
}

}  // namespace orifold
