#include "flatf/semisimple.hpp"

#include <stdexcept>

namespace orifold {

ScalarMatrix multiplication_operator_at_origin(const FlatFStructure& s,
                                               const std::vector<Scalar>& v) {
    int n = s.n();
    ScalarMatrix m(n, n);
    for (int b = 0; b < n; ++b) {
        ScalarMatrix cb = s.c_matrix(b).constant_term();
        // (v o x)^a = c^a_{b g} v^b x^g ; column action on x
        for (int a = 0; a < n; ++a)
            for (int g = 0; g < n; ++g) m.at(a, g) += v[static_cast<size_t>(b)] * cb.at(a, g);
    }
    return m;
}

std::vector<FormalSeries> circ(const FlatFStructure& s, const std::vector<FormalSeries>& x,
                               const std::vector<FormalSeries>& y) {
    int n = s.n();
    int ord = s.order() - 2;
    for (const auto& f : x) ord = std::min(ord, f.order());
    for (const auto& f : y) ord = std::min(ord, f.order());
    std::vector<FormalSeries> r(static_cast<size_t>(n), FormalSeries::zero(n, ord));
    for (int b = 0; b < n; ++b) {
        const SeriesMatrix& cb = s.c_matrix(b);
        for (int a = 0; a < n; ++a)
            for (int g = 0; g < n; ++g) {
                if (cb.at(a, g).is_zero()) continue;
                r[static_cast<size_t>(a)] += cb.at(a, g) * x[static_cast<size_t>(b)] * y[static_cast<size_t>(g)];
            }
    }
    return r;
}

namespace {

// Candidate splitting elements, in deterministic search order.
std::vector<std::vector<Scalar>> splitting_candidates(const FlatFStructure& s) {
    int n = s.n();
    std::vector<std::vector<Scalar>> cands;
    cands.push_back(s.unit());
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> v(static_cast<size_t>(n));
        v[static_cast<size_t>(i)] = Scalar(1);
        cands.push_back(v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (long sgn : {1L, -1L}) {
                std::vector<Scalar> v(static_cast<size_t>(n));
                v[static_cast<size_t>(i)] = Scalar(1);
                v[static_cast<size_t>(j)] = Scalar(sgn);
                cands.push_back(v);
            }
    for (int i = 0; i < n; ++i)
        for (long k : {1L, 2L, 3L, -1L}) {
            std::vector<Scalar> v = s.unit();
            v[static_cast<size_t>(i)] += Scalar(k);
            cands.push_back(v);
        }
    // small graded combination 1*d_1 + 2*d_2 + ... separates generic spectra
    std::vector<Scalar> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = Scalar(i + 1);
    cands.push_back(w);
    return cands;
}

bool has_nilpotent_origin(const FlatFStructure& s) {
    // (H, o_0) has nilpotents iff some basis multiplication operator has a
    // non-squarefree minimal polynomial on the radical; a practical exact
    // test: the algebra is semisimple iff the trace form T(x,y) = tr(L_x L_y)
    // is nondegenerate.
    int n = s.n();
    std::vector<ScalarMatrix> ops;
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> v(static_cast<size_t>(n));
        v[static_cast<size_t>(i)] = Scalar(1);
        ops.push_back(multiplication_operator_at_origin(s, v));
    }
    ScalarMatrix tf(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            tf.at(i, j) = (ops[static_cast<size_t>(i)] * ops[static_cast<size_t>(j)]).trace();
    return tf.det().is_zero();
}

}  // namespace

IdempotentFrame idempotents(const FlatFStructure& s) {
    int n = s.n();
    if (has_nilpotent_origin(s))
        throw std::domain_error("not semisimple: origin algebra has nilpotent elements");

    std::optional<SimpleSpectrum> spec;
    std::vector<Scalar> chosen;
    for (const auto& v : splitting_candidates(s)) {
        ScalarMatrix m = multiplication_operator_at_origin(s, v);
        auto sp = simple_spectrum(m);
        if (sp) {
            spec = sp;
            chosen = v;
            break;
        }
    }
    if (!spec)
        throw std::domain_error(
            "not semisimple: no splitting element with distinct Q(i) eigenvalues found in the "
            "candidate set");

    int ord = s.order() - 2;  // certified order of c(t)
    IdempotentFrame frame;
    frame.splitting_element = chosen;

    // order-0 idempotents: spectral projectors applied to the unit
    std::vector<std::vector<Scalar>> pi0;
    for (int i = 0; i < n; ++i) pi0.push_back(spec->projectors[static_cast<size_t>(i)].apply(s.unit()));

    for (int i = 0; i < n; ++i) {
        // Hensel lift: solve pi o pi = pi degree by degree; the linearization
        // 2 L_{pi0} - 1 is invertible with eigenvalues +-1.
        ScalarMatrix lin = Scalar(2) * multiplication_operator_at_origin(s, pi0[static_cast<size_t>(i)]) -
                           ScalarMatrix::identity(n);
        ScalarMatrix lin_inv = lin.inverse();
        std::vector<FormalSeries> pi(static_cast<size_t>(n));
        for (int a = 0; a < n; ++a)
            pi[static_cast<size_t>(a)] =
                FormalSeries::constant(pi0[static_cast<size_t>(i)][static_cast<size_t>(a)], n, ord);
        for (int d = 1; d <= ord; ++d) {
            std::vector<FormalSeries> sq = circ(s, pi, pi);
            auto monos = monomials_of_degree(n, d);
            for (const auto& m : monos) {
                std::vector<Scalar> rd(static_cast<size_t>(n));
                for (int a = 0; a < n; ++a)
                    rd[static_cast<size_t>(a)] =
                        sq[static_cast<size_t>(a)].coeff(m) - pi[static_cast<size_t>(a)].coeff(m);
                std::vector<Scalar> x = lin_inv.apply(rd);
                for (int a = 0; a < n; ++a) {
                    Scalar nc = pi[static_cast<size_t>(a)].coeff(m) - x[static_cast<size_t>(a)];
                    pi[static_cast<size_t>(a)].set_coeff(m, nc);
                }
            }
        }
        frame.pi.push_back(std::move(pi));
    }
    return frame;
}

std::vector<FormalSeries> canonical_coordinates(const FlatFStructure& s,
                                                const IdempotentFrame& frame) {
    int n = s.n();
    int ord = s.order() - 2;
    std::vector<FormalSeries> u;
    if (s.euler()) {
        SeriesMatrix uo = s.u_operator();
        for (int i = 0; i < n; ++i) {
            const auto& pi = frame.pi[static_cast<size_t>(i)];
            // pick a component with nonzero constant term
            int k = -1;
            for (int a = 0; a < n; ++a)
                if (!pi[static_cast<size_t>(a)].constant_term().is_zero()) {
                    k = a;
                    break;
                }
            if (k < 0) throw std::domain_error("canonical_coordinates: vanishing idempotent");
            FormalSeries num(n, ord);
            for (int b = 0; b < n; ++b) num += uo.at(k, b) * pi[static_cast<size_t>(b)];
            FormalSeries ui = num * pi[static_cast<size_t>(k)].inverse();
            // consistency: U pi_i = u^i pi_i on all components
            for (int a = 0; a < n; ++a) {
                FormalSeries lhs(n, ord);
                for (int b = 0; b < n; ++b) lhs += uo.at(a, b) * pi[static_cast<size_t>(b)];
                if (!lhs.equal_up_to_order(ui * pi[static_cast<size_t>(a)]))
                    throw std::domain_error("canonical_coordinates: U pi != u pi (invalid structure)");
            }
            u.push_back(ui);
        }
        return u;
    }
    // no Euler field: integrate the dual coframe, u^i(0) = 0
    SeriesMatrix pimat(n, n, n, ord);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) pimat.at(a, i) = frame.pi[static_cast<size_t>(i)][static_cast<size_t>(a)];
    SeriesMatrix coframe = pimat.inverse();
    for (int i = 0; i < n; ++i) {
        std::vector<FormalSeries> omega;
        for (int a = 0; a < n; ++a) omega.push_back(coframe.at(i, a));
        if (!one_form_closed(omega))
            throw std::domain_error("canonical_coordinates: coframe not closed (invalid structure)");
        u.push_back(integrate_one_form(omega));
    }
    return u;
}

SpectrumData spectrum(const FlatFStructure& s) {
    SpectrumData sd;
    sd.mu_lambda = s.mu_lambda();
    int n = s.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            Scalar gap = s.euler()->q[static_cast<size_t>(a)] - s.euler()->q[static_cast<size_t>(b)];
            if (gap.is_integer() && gap.re().sign() < 0) sd.resonance_pairs.emplace_back(a, b);
        }
    return sd;
}

}  // namespace orifold
