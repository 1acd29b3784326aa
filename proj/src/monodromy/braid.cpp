#include "monodromy/braid.hpp"

#include "core/qipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace orifold {

BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        bool neg = false;
        size_t p = 0;
        if (p < tok.size() && (tok[p] == '-' || tok[p] == '+')) {
            neg = tok[p] == '-';
            ++p;
        }
        if (p < tok.size() && (tok[p] == 'b' || tok[p] == 'B')) ++p;
        if (p < tok.size() && (tok[p] == '-' || tok[p] == '+')) {
            neg = neg || tok[p] == '-';
            ++p;
        }
        if (p >= tok.size()) throw std::invalid_argument("braid word: bad token '" + tok + "'");
        int v = 0;
        for (; p < tok.size(); ++p) {
            if (tok[p] < '0' || tok[p] > '9')
                throw std::invalid_argument("braid word: bad token '" + tok + "'");
            v = v * 10 + (tok[p] - '0');
        }
        if (v == 0) throw std::invalid_argument("braid word: generator index must be >= 1");
        w.push_back(neg ? -v : v);
    }
    return w;
}

BraidWord center_word(int n) {
    BraidWord w;
    for (int rep = 0; rep < n; ++rep)
        for (int i = 1; i <= n - 1; ++i) w.push_back(i);
    return w;
}

namespace {

// 2x2-block insertion at rows/cols (i, i+1), identity elsewhere.
template <class Mat, class Sc>
Mat block2(int i, const Sc& a00, const Sc& a01, const Sc& a10, const Sc& a11, const Mat& id) {
    Mat b = id;
    b.at(i, i) = a00;
    b.at(i, i + 1) = a01;
    b.at(i + 1, i) = a10;
    b.at(i + 1, i + 1) = a11;
    return b;
}

struct ExactOps {
    using Mat = ScalarMatrix;
    using Sc = Scalar;
    int n;
    // float-shadow fallback for hbar: 0 = refuse non-integer gaps (exact
    // mode); > 0 = evaluate e^{2 pi i gap} at this precision and rationalize
    mpfr_prec_t shadow_bits = 0;
    Mat identity() const { return ScalarMatrix::identity(n); }
    Sc zero() const { return Scalar(); }
    Sc one() const { return Scalar(1); }
    Sc hbar(const Sc& gap, const Sc& multiplied_entry) const {
        if (gap.is_integer()) return Scalar(1);
        if (multiplied_entry.is_zero()) return Scalar(1);  // value never used
        if (shadow_bits > 0) {
            CFloat h = CFloat::exp2pii(gap, shadow_bits);
            auto re = rationalize(h.re.to_double(), 1e-14, 4000000000000000L);
            auto im = rationalize(h.im.to_double(), 1e-14, 4000000000000000L);
            if (re && im) return Scalar(*re, *im);
        }
        throw std::domain_error(
            "braid action: hbar = e^{2 pi i gap} not exactly representable in exact mode");
    }
    Sc neg(const Sc& x) const { return -x; }
    Sc mul(const Sc& x, const Sc& y) const { return x * y; }
    Sc inv(const Sc& x) const { return x.inv(); }
};

struct FloatOps {
    using Mat = CMatrix;
    using Sc = CFloat;
    int n;
    mpfr_prec_t bits;
    Mat identity() const { return CMatrix::identity(n, bits); }
    Sc zero() const { return CFloat(bits); }
    Sc one() const { return CFloat::one(bits); }
    Sc hbar(const Sc& gap, const Sc&) const {
        BigFloat two_pi = BigFloat::from_long(2, bits) * BigFloat::pi(bits);
        return CFloat::exp(CFloat(-(two_pi * gap.im), two_pi * gap.re));
    }
    Sc neg(const Sc& x) const { return -x; }
    Sc mul(const Sc& x, const Sc& y) const { return x * y; }
    Sc inv(const Sc& x) const { return one() / x; }
};

template <class Ops>
struct TripleT {
    typename Ops::Mat g1, g2;
    std::vector<typename Ops::Sc> g3;
};

template <class Ops>
void apply_generator(const Ops& ops, TripleT<Ops>& g, int signed_i) {
    int i = std::abs(signed_i) - 1;
    if (i < 0 || i + 1 >= ops.n) throw std::invalid_argument("braid generator out of range");
    auto id = ops.identity();
    if (signed_i > 0) {
        auto a = g.g1.at(i, i + 1);
        auto c = g.g2.at(i + 1, i);
        auto gap = g.g3[static_cast<size_t>(i + 1)] - g.g3[static_cast<size_t>(i)];
        auto hb = ops.hbar(gap, a);
        auto b1_inv = block2(i, ops.zero(), ops.one(), ops.one(), ops.neg(a), id);
        auto b2 = block2(i, ops.zero(), ops.one(), ops.one(), c, id);
        auto b3 = block2(i, ops.mul(hb, a), ops.one(), ops.one(), ops.zero(), id);
        auto b2_inv = block2(i, ops.neg(c), ops.one(), ops.one(), ops.zero(), id);
        g.g1 = b1_inv * g.g1 * b2;
        g.g2 = b2_inv * g.g2 * b3;
        std::swap(g.g3[static_cast<size_t>(i)], g.g3[static_cast<size_t>(i + 1)]);
    } else {
        // inverse generator: g' with (g')^{beta_i} = g
        std::swap(g.g3[static_cast<size_t>(i)], g.g3[static_cast<size_t>(i + 1)]);
        auto gap = g.g3[static_cast<size_t>(i + 1)] - g.g3[static_cast<size_t>(i)];
        auto c_new = g.g1.at(i, i + 1);          // (g'_2)_{i+1,i} = (g_1)_{i,i+1}
        auto raw = g.g2.at(i + 1, i);            // = hbar' * a'
        auto hb = ops.hbar(gap, raw);
        auto a_new = ops.mul(ops.inv(hb), raw);  // safe: raw zero -> a_new zero
        auto b1 = block2(i, a_new, ops.one(), ops.one(), ops.zero(), id);
        auto b2 = block2(i, ops.zero(), ops.one(), ops.one(), c_new, id);
        auto b2_inv = block2(i, ops.neg(c_new), ops.one(), ops.one(), ops.zero(), id);
        auto b3_inv = block2(i, ops.zero(), ops.one(), ops.one(), ops.neg(ops.mul(hb, a_new)), id);
        g.g1 = b1 * g.g1 * b2_inv;
        g.g2 = b2 * g.g2 * b3_inv;
    }
}

}  // namespace

BraidTriple braid_apply(const BraidTriple& g, const BraidWord& word) {
    int n = g.g1.rows();
    ExactOps ops{n};
    TripleT<ExactOps> t{g.g1, g.g2, g.g3};
    for (int s : word) apply_generator(ops, t, s);
    return {t.g1, t.g2, t.g3};
}

BraidTripleF BraidTripleF::from_exact(const BraidTriple& g, mpfr_prec_t bits) {
    BraidTripleF f{to_cmatrix(g.g1, bits), to_cmatrix(g.g2, bits), {}};
    for (const auto& d : g.g3) f.g3.push_back(CFloat::from_scalar(d, bits));
    return f;
}

BraidTripleF braid_apply_float(const BraidTripleF& g, const BraidWord& word, mpfr_prec_t bits) {
    int n = g.g1.rows();
    FloatOps ops{n, bits};
    TripleT<FloatOps> t{g.g1, g.g2, g.g3};
    for (int s : word) apply_generator(ops, t, s);
    return {t.g1, t.g2, t.g3};
}

static void check_triangular(const MonodromyDatum& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            if (i < j && !m.S2.at(i, j).is_zero())
                throw std::domain_error("braid_on_datum: S2 not lower unitriangular (non-lexicographic input)");
            if (i > j && !m.S1.at(i, j).is_zero())
                throw std::domain_error("braid_on_datum: S1 not upper unitriangular (non-lexicographic input)");
            if (i == j && (!m.S1.at(i, i).is_one() || !m.S2.at(i, i).is_one()))
                throw std::domain_error("braid_on_datum: Stokes diagonals must be 1");
        }
}

MonodromyDatum braid_on_datum(const MonodromyDatum& m, int generator) {
    check_triangular(m);
    int i = std::abs(generator) - 1;
    if (i < 0 || i + 1 >= m.n) throw std::invalid_argument("braid generator out of range");
    BraidTriple g{m.S1, m.S2, {}};
    for (int a = 0; a < m.n; ++a) g.g3.push_back(m.B.at(a, a));
    // float-mode datum files carry rational representatives within tolerance;
    // the hbar factor is then evaluated in the shadow and re-rationalized
    ExactOps ops{m.n, m.mode == NumericMode::Float ? m.float_bits : 0};
    auto apply_one = [&](const BraidTriple& t, int s) {
        TripleT<ExactOps> tt{t.g1, t.g2, t.g3};
        apply_generator(ops, tt, s);
        return BraidTriple{tt.g1, tt.g2, tt.g3};
    };

    MonodromyDatum out = m;
    // The central connection matrix moves by the B2 block of the acting
    // triple: C -> C B2. This is the unique right-multiplication making the
    // cyclic identity S1^{-1} e^{2 pi i B} S2^{-1} = C^{-1} e^{2 pi i L} C
    // carry over (B1 e^{2 pi i P Lambda P} B3^{-1} = e^{2 pi i Lambda}
    // exactly, so the conjugation happens by B2 on the right).
    if (generator > 0) {
        Scalar c = m.S2.at(i + 1, i);
        ScalarMatrix b2 = ScalarMatrix::identity(m.n);
        b2.at(i, i) = Scalar();
        b2.at(i, i + 1) = Scalar(1);
        b2.at(i + 1, i) = Scalar(1);
        b2.at(i + 1, i + 1) = c;
        out.C = m.C * b2;
    } else {
        // inverse step undoes the forward one: C' = C B2(g')^{-1} with B2
        // built from the pulled-back triple
        BraidTriple probe = apply_one(g, generator);
        Scalar c = probe.g2.at(i + 1, i);
        ScalarMatrix b2 = ScalarMatrix::identity(m.n);
        b2.at(i, i) = Scalar();
        b2.at(i, i + 1) = Scalar(1);
        b2.at(i + 1, i) = Scalar(1);
        b2.at(i + 1, i + 1) = c;
        out.C = m.C * b2.inverse();
    }
    BraidTriple tg = apply_one(g, generator);
    out.S1 = tg.g1;
    out.S2 = tg.g2;
    for (int a = 0; a < m.n; ++a) out.B.at(a, a) = tg.g3[static_cast<size_t>(a)];
    // The mutation swaps the canonical branches i <-> i+1 and then restores
    // the lexicographic order, so the stored value tuple is unchanged: only
    // (S1, S2, B, C) move. Validity w.r.t. the same (u, tau) is preserved.
    return out;
}

MonodromyDatum braid_on_datum_word(const MonodromyDatum& m, const BraidWord& word) {
    MonodromyDatum cur = m;
    for (int s : word) cur = braid_on_datum(cur, s);
    return cur;
}

FloatDatumImage braid_on_datum_float(const MonodromyDatum& m, const BraidWord& word,
                                     mpfr_prec_t bits) {
    check_triangular(m);
    FloatOps ops{m.n, bits};
    TripleT<FloatOps> t{to_cmatrix(m.S1, bits), to_cmatrix(m.S2, bits), {}};
    for (int a = 0; a < m.n; ++a) t.g3.push_back(CFloat::from_scalar(m.B.at(a, a), bits));
    FloatDatumImage img{t.g1, t.g2, to_cmatrix(m.C, bits), t.g3, m.u};
    for (int s : word) {
        int i = std::abs(s) - 1;
        CMatrix b2 = CMatrix::identity(m.n, bits);
        if (s > 0) {
            CFloat c = t.g2.at(i + 1, i);
            b2.at(i, i) = CFloat(bits);
            b2.at(i, i + 1) = CFloat::one(bits);
            b2.at(i + 1, i) = CFloat::one(bits);
            b2.at(i + 1, i + 1) = c;
            img.c = img.c * b2;
            apply_generator(ops, t, s);
        } else {
            apply_generator(ops, t, s);
            CFloat c = t.g2.at(i + 1, i);
            b2.at(i, i) = CFloat(bits);
            b2.at(i, i + 1) = CFloat::one(bits);
            b2.at(i + 1, i) = CFloat::one(bits);
            b2.at(i + 1, i + 1) = c;
            img.c = img.c * b2.inverse();
        }
    }
    img.s1 = t.g1;
    img.s2 = t.g2;
    img.b = t.g3;
    return img;
}

FloatDatumImage deck_on_datum_float(const MonodromyDatum& m, long k, mpfr_prec_t bits) {
    int n = m.n;
    // e^{2 pi i k B} diagonal, M0 = e^{2 pi i L}
    CMatrix ekb(n, n, bits), ekb_inv(n, n, bits);
    for (int i = 0; i < n; ++i) {
        Scalar kb = Scalar(k) * m.B.at(i, i);
        ekb.at(i, i) = CFloat::exp2pii(kb, bits);
        ekb_inv.at(i, i) = CFloat::exp2pii(-kb, bits);
    }
    CMatrix m0 = exp2pii_float(m.L, bits);
    CMatrix m0k = CMatrix::identity(n, bits);
    CMatrix m0inv = m0.inverse();
    for (long j = 0; j < std::abs(k); ++j) m0k = m0k * (k > 0 ? m0inv : m0);
    FloatDatumImage img{ekb_inv * to_cmatrix(m.S1, bits) * ekb,
                        ekb_inv * to_cmatrix(m.S2, bits) * ekb,
                        m0k * to_cmatrix(m.C, bits) * ekb,
                        {},
                        m.u};
    for (int i = 0; i < n; ++i) img.b.push_back(CFloat::from_scalar(m.B.at(i, i), bits));
    return img;
}

}  // namespace orifold
