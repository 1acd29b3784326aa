#include "fixtures.hpp"
#include "monodromy/actions.hpp"
#include "monodromy/braid.hpp"
#include "monodromy/factor.hpp"
#include "monodromy/jump.hpp"

#include <doctest.h>

using namespace orifold;
using namespace orifold::testing;

namespace {

Scalar sc(long re, long im = 0) { return Scalar(Rat(re), Rat(im)); }

MonodromyDatum trivial_datum(int n = 2) {
    MonodromyDatum m;
    m.n = n;
    m.u = {sc(0), sc(1)};
    if (n == 3) m.u = {sc(0), sc(1), sc(3)};
    m.tau = ExactAngle{Rat(0), Rat(0)};
    m.B = ScalarMatrix(n, n);
    m.D = ScalarMatrix(n, n);
    m.L = ScalarMatrix(n, n);
    m.S1 = ScalarMatrix::identity(n);
    m.S2 = ScalarMatrix::identity(n);
    m.C = ScalarMatrix::identity(n);
    return m;
}

Scalar rationalize_cf(const CFloat& z) {
    auto re = rationalize(z.re.to_double(), 1e-13, 1000000000000L);
    auto im = rationalize(z.im.to_double(), 1e-13, 1000000000000L);
    REQUIRE(re.has_value());
    REQUIRE(im.has_value());
    return Scalar(*re, *im);
}

// Nontrivial n = 2 datum satisfying all nine conditions, with (8) holding in
// the float shadow far below the 1e-12 tolerance: pick diagonal L and a
// rational C, push e^{2 pi i L} through the conjugation, and UDL-decompose
// the result into S1^{-1} e^{2 pi i B} S2^{-1}; the trace identity is made
// exact by solving for b1.
MonodromyDatum consistent_datum(const Scalar& l1, const Scalar& l2, const Scalar& c01,
                                const Scalar& c10, mpfr_prec_t bits = 256,
                                const Scalar& r01 = Scalar(), long d_int = 0) {
    MonodromyDatum m = trivial_datum();
    m.u = {sc(1), sc(0)};
    m.mode = NumericMode::Float;
    m.float_bits = 192;
    m.L.at(0, 0) = l1;
    m.L.at(1, 1) = l2;
    m.L.at(0, 1) = r01;
    m.D.at(0, 0) = Scalar(d_int);
    m.C.at(0, 1) = c01;
    m.C.at(1, 0) = c10;

    CMatrix c = to_cmatrix(m.C, bits);
    CMatrix el = exp2pii_float(m.L, bits);
    CMatrix mm = c.inverse() * el * c;
    // UDL: M = U diag(d1, d2) L with U/L unitriangular
    CFloat d2 = mm.at(1, 1);
    CFloat u = mm.at(0, 1) / d2;
    CFloat l = mm.at(1, 0) / d2;
    CFloat d1 = mm.at(0, 0) - mm.at(0, 1) * mm.at(1, 0) / d2;
    // S1 = U^{-1}, S2 = L^{-1}
    m.S1.at(0, 1) = -rationalize_cf(u);
    m.S2.at(1, 0) = -rationalize_cf(l);
    // b2 = log d2 / (2 pi i), b1 = (l1 + l2) - b2 keeps the trace exact
    CFloat logd2 = CFloat::log(d2);
    BigFloat two_pi = BigFloat::from_long(2, bits) * BigFloat::pi(bits);
    CFloat b2f(logd2.im / two_pi, -(logd2.re / two_pi));
    Scalar b2 = rationalize_cf(b2f);
    m.B.at(1, 1) = b2;
    m.B.at(0, 0) = Scalar(d_int) + l1 + l2 - b2;
    (void)d1;
    return m;
}

double fd_dist(const CMatrix& a, const CMatrix& b) { return CMatrix::rel_distance(a, b); }

}  // namespace

TEST_CASE("stokes rays and admissibility") {
    {
        std::vector<Scalar> u{sc(0), sc(1)};
        auto rays = stokes_ray_set(u);
        REQUIRE(rays.size() == 2);
        for (const auto& r : rays) CHECK(r.x.is_zero());
        CHECK(is_admissible(ExactAngle{Rat(0), Rat(0)}, u));
        CHECK_FALSE(is_admissible(ExactAngle{Rat(1, 2), Rat(0)}, u));
        CHECK_FALSE(is_admissible(ExactAngle{Rat(-1, 2), Rat(0)}, u));
        CHECK(is_admissible(ExactAngle{Rat(1, 3), Rat(0)}, u));
        CHECK(is_admissible(ExactAngle{Rat(1, 2), Rat(1, 100)}, u));
    }
    {
        std::vector<Scalar> u{sc(5), sc(5), sc(5)};
        CHECK(stokes_ray_set(u).empty());
        CHECK(is_admissible(ExactAngle{Rat(1, 2), Rat(0)}, u));
    }
    {
        std::vector<Scalar> u{sc(0), sc(0, 1)};
        auto rays = stokes_ray_set(u);
        REQUIRE(rays.size() == 2);
        for (const auto& r : rays) CHECK(r.y.is_zero());
        CHECK(is_admissible(ExactAngle{Rat(1, 2), Rat(0)}, u));
        CHECK_FALSE(is_admissible(ExactAngle{Rat(0), Rat(0)}, u));
    }
}

TEST_CASE("lexicographic order: descending projection, ties flagged") {
    {
        LexOrder lo = lexicographic_order({sc(0), sc(1)}, ExactAngle{Rat(0), Rat(0)});
        CHECK(lo.perm == std::vector<int>({1, 0}));
        CHECK_FALSE(lo.degenerate);
    }
    {
        LexOrder lo = lexicographic_order({sc(1), sc(0)}, ExactAngle{Rat(0), Rat(0)});
        CHECK(lo.perm == std::vector<int>({0, 1}));
    }
    {
        LexOrder lo = lexicographic_order({sc(2), sc(2), sc(0)}, ExactAngle{Rat(0), Rat(0)});
        CHECK(lo.perm == std::vector<int>({0, 1, 2}));
        CHECK_FALSE(lo.degenerate);
    }
}

TEST_CASE("datum validation: the nine conditions and their mutations") {
    MonodromyDatum m = trivial_datum();
    ValidationReport rep = validate_datum(m);
    REQUIRE(rep.conditions.size() == 9);
    CHECK(rep.pass());
    for (const auto& c : rep.conditions) CHECK(c.exact);

    auto failing = [](const MonodromyDatum& d) {
        ValidationReport r = validate_datum(d);
        std::vector<int> bad;
        for (size_t i = 0; i < r.conditions.size(); ++i)
            if (!r.conditions[i].pass) bad.push_back(static_cast<int>(i) + 1);
        return bad;
    };
    auto contains = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };

    // (1) off-diagonal B also invalidates the exponential identity (8)
    {
        MonodromyDatum d = m;
        d.B.at(0, 1) = sc(1);
        auto bad = failing(d);
        CHECK(contains(bad, 1));
        CHECK_FALSE(contains(bad, 3));
    }
    // (2) non-integer D (with L compensating the trace); e^{2 pi i L} is then
    // genuinely nontrivial, so (8) legitimately fails too
    {
        MonodromyDatum d = m;
        d.D.at(0, 0) = Scalar(Rat(1, 2));
        d.L.at(0, 0) = Scalar(Rat(-1, 2));
        auto bad = failing(d);
        CHECK(contains(bad, 2));
        CHECK_FALSE(contains(bad, 3));
    }
    // (3) trace mismatch: B = diag(1, 0) fails exactly condition (3)
    {
        MonodromyDatum d = m;
        d.B.at(0, 0) = sc(1);
        CHECK(failing(d) == std::vector<int>({3}));
    }
    // (4) det S1 != 1
    {
        MonodromyDatum d = m;
        d.S1.at(0, 0) = sc(2);
        CHECK(contains(failing(d), 4));
    }
    // (5) non-unit diagonal with compensating determinant
    {
        MonodromyDatum d = m;
        d.S1.at(0, 0) = sc(2);
        d.S1.at(1, 1) = Scalar(Rat(1, 2));
        auto bad = failing(d);
        CHECK(contains(bad, 5));
        CHECK_FALSE(contains(bad, 4));
    }
    // (6) S1 entry in the forbidden sector: u = (0,1) ascending means the
    // (1,2) position is forbidden for S1
    {
        MonodromyDatum d = m;
        d.S1.at(0, 1) = sc(1);
        CHECK(contains(failing(d), 6));
    }
    // (7) S2 entry in the forbidden sector
    {
        MonodromyDatum d = m;
        d.S2.at(1, 0) = sc(1);
        CHECK(contains(failing(d), 7));
    }
    // (9) coalescence vanishing (spec example): u = (0,0), nonzero (1,2)
    {
        MonodromyDatum d = m;
        d.u = {sc(0), sc(0)};
        d.S1.at(0, 1) = sc(1);
        CHECK(contains(failing(d), 9));
    }
    // (8) exact-mode check with trivial exponentials: S2 S1 = 1 fails
    {
        MonodromyDatum d = m;
        d.u = {sc(1), sc(0)};
        d.S1.at(0, 1) = sc(2);
        auto bad = failing(d);
        CHECK(bad == std::vector<int>({8}));
    }
    // full consistent float-mode datum: all nine pass, (8) decided in floats
    {
        MonodromyDatum d = consistent_datum(Scalar(Rat(1, 3)), Scalar(Rat(-1, 5)),
                                            Scalar(Rat(1, 2)), Scalar(Rat(1, 7)));
        ValidationReport r = validate_datum(d);
        CHECK(r.pass());
        bool exact8 = true;
        for (const auto& c : r.conditions)
            if (c.name.rfind("(8)", 0) == 0) exact8 = c.exact;
        CHECK_FALSE(exact8);
    }
}

TEST_CASE("normalization actions compose, invert, and preserve admissibility") {
    MonodromyDatum m = consistent_datum(Scalar(Rat(1, 3)), Scalar(Rat(-1, 5)), Scalar(Rat(1, 2)),
                                        Scalar(Rat(1, 7)));
    REQUIRE(validate_datum(m).pass());

    // torus identity
    {
        MonodromyDatum d = normalization_action(m, NormalizationAction::torus_action({sc(1), sc(1)}));
        CHECK(d.S1 == m.S1);
        CHECK(d.C == m.C);
    }
    // torus conjugation stays admissible and inverts
    {
        MonodromyDatum d = normalization_action(m, NormalizationAction::torus_action({sc(2), sc(5)}));
        CHECK(validate_datum(d).pass());
        CHECK(d.S1.at(0, 1) == Scalar(Rat(2, 5)) * m.S1.at(0, 1));
        MonodromyDatum back = normalization_action(
            d, NormalizationAction::torus_action({Scalar(Rat(1, 2)), Scalar(Rat(1, 5))}));
        CHECK(back.S1 == m.S1);
        CHECK(back.C == m.C);
    }
    // permutation swaps u and conjugates; applying it twice is the identity
    {
        MonodromyDatum d = normalization_action(m, NormalizationAction::permutation({1, 0}));
        CHECK(d.u[0] == m.u[1]);
        CHECK(d.S1.at(1, 0) == m.S1.at(0, 1));
        CHECK(validate_datum(d).pass());
        MonodromyDatum back = normalization_action(d, NormalizationAction::permutation({1, 0}));
        CHECK(back.S1 == m.S1);
        CHECK(back.u[0] == m.u[0]);
    }
    // deck k then deck -k: identity (trivial conjugations in exact mode need
    // integer B; here use an integer-B datum)
    {
        MonodromyDatum d = trivial_datum();
        d.B.at(0, 0) = sc(2);
        d.D.at(0, 0) = sc(2);
        MonodromyDatum a = normalization_action(d, NormalizationAction::deck(1));
        MonodromyDatum b = normalization_action(a, NormalizationAction::deck(-1));
        CHECK(b.S1 == d.S1);
        CHECK(b.C == d.C);
        // non-integer exponents are refused in exact mode
        MonodromyDatum t = m;
        t.mode = NumericMode::Exact;
        CHECK_THROWS_AS(normalization_action(t, NormalizationAction::deck(1)), std::domain_error);
    }
    // parabolic action on the z = 0 block: a nonzero Levelt exponent demands
    // nontrivial Stokes matrices, so build the consistent datum with an
    // off-diagonal L entry and matching D
    {
        MonodromyDatum d = consistent_datum(Scalar(Rat(1, 3)), Scalar(Rat(1, 3)),
                                            Scalar(Rat(1, 2)), Scalar(Rat(1, 7)), 256,
                                            Scalar(Rat(2, 5)), 1);
        REQUIRE(validate_datum(d).pass());
        ScalarMatrix a = ScalarMatrix::identity(2);
        a.at(0, 1) = sc(7);
        MonodromyDatum img = normalization_action(d, NormalizationAction::parabolic(a));
        CHECK(validate_datum(img).pass());
        CHECK(img.C == a.inverse() * d.C);
        CHECK(img.L == a.inverse() * d.L * a);
        ScalarMatrix badp = ScalarMatrix::identity(2);
        badp.at(1, 0) = sc(1);
        CHECK_THROWS_AS(normalization_action(d, NormalizationAction::parabolic(badp)),
                        std::domain_error);
    }
    // lambda shift re-splits the z = 0 exponents (float shadow for the
    // fractional exponentials)
    {
        MonodromyDatum d = trivial_datum();
        d.mode = NumericMode::Float;
        d.D.at(0, 0) = sc(1);
        d.L.at(0, 0) = Scalar(Rat(-1, 4));
        d.B.at(0, 0) = Scalar(Rat(3, 4));
        REQUIRE(validate_datum(d).pass());
        MonodromyDatum img =
            normalization_action(d, NormalizationAction::lambda_shift(Scalar(Rat(1, 2))));
        CHECK(validate_datum(img).pass());
        CHECK(img.B.at(0, 0) == Scalar(Rat(5, 4)));
        CHECK(img.B.at(1, 1) == Scalar(Rat(1, 2)));
        CHECK(img.mu()[0] == Scalar(Rat(-5, 4)));
        CHECK(img.mu()[1] == Scalar(Rat(-1, 2)));
        CHECK(img.D.at(0, 0) == sc(2));
        CHECK(img.D.at(1, 1) == sc(1));
    }
}

TEST_CASE("braid action on triples: exact relations and the worked example") {
    Rng rng(88);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + static_cast<int>(rng.range(0, 2));
        BraidTriple g;
        g.g1 = ScalarMatrix::identity(n);
        g.g2 = ScalarMatrix::identity(n);
        for (int i = 0; i < n; ++i) {
            g.g3.push_back(sc(rng.range(-3, 3)));
            for (int j = i + 1; j < n; ++j) {
                g.g1.at(i, j) = sc(rng.range(-4, 4));
                g.g2.at(j, i) = sc(rng.range(-4, 4));
            }
        }
        if (n >= 4) {
            BraidTriple ab = braid_apply(g, {1, 3});
            BraidTriple ba = braid_apply(g, {3, 1});
            CHECK(ab.g1 == ba.g1);
            CHECK(ab.g2 == ba.g2);
            CHECK(ab.g3 == ba.g3);
        }
        int i = 1 + static_cast<int>(rng.range(0, n - 3));
        BraidTriple lhs = braid_apply(g, {i, i + 1, i});
        BraidTriple rhs = braid_apply(g, {i + 1, i, i + 1});
        CHECK(lhs.g1 == rhs.g1);
        CHECK(lhs.g2 == rhs.g2);
        CHECK(lhs.g3 == rhs.g3);
        BraidTriple round = braid_apply(g, {i, -i});
        CHECK(round.g1 == g.g1);
        CHECK(round.g2 == g.g2);
        BraidTriple round2 = braid_apply(g, {-i, i});
        CHECK(round2.g1 == g.g1);
        CHECK(round2.g2 == g.g2);
    }

    {
        Scalar a = sc(2), b = sc(3), c = sc(5), al = sc(7), be = sc(11), ga = sc(13);
        BraidTriple g;
        g.g1 = ScalarMatrix::identity(3);
        g.g1.at(0, 1) = a;
        g.g1.at(0, 2) = b;
        g.g1.at(1, 2) = c;
        g.g2 = ScalarMatrix::identity(3);
        g.g2.at(1, 0) = al;
        g.g2.at(2, 0) = be;
        g.g2.at(2, 1) = ga;
        g.g3 = {sc(1), sc(2), sc(4)};
        BraidTriple b1 = braid_apply(g, {1});
        CHECK(b1.g1.at(0, 1) == al);
        CHECK(b1.g1.at(0, 2) == c);
        CHECK(b1.g1.at(1, 2) == b - a * c);
        CHECK(b1.g2.at(1, 0) == a);
        CHECK(b1.g2.at(2, 0) == a * be + ga);
        CHECK(b1.g2.at(2, 1) == be);
        CHECK(b1.g3 == std::vector<Scalar>({sc(2), sc(1), sc(4)}));
        BraidTriple b2 = braid_apply(g, {2});
        CHECK(b2.g1.at(0, 1) == b);
        CHECK(b2.g1.at(0, 2) == a + b * ga);
        CHECK(b2.g1.at(1, 2) == ga);
        CHECK(b2.g2.at(1, 0) == be - al * ga);
        CHECK(b2.g2.at(2, 0) == al);
        CHECK(b2.g2.at(2, 1) == c);
        CHECK(b2.g3 == std::vector<Scalar>({sc(1), sc(4), sc(2)}));
        BraidTriple cen = braid_apply(g, {1, 2, 1, 2, 1, 2});
        CHECK(cen.g1 == g.g1);
        CHECK(cen.g2 == g.g2);
        CHECK(cen.g3 == g.g3);
    }

    {
        BraidTriple g;
        g.g1 = ScalarMatrix::identity(2);
        g.g1.at(0, 1) = sc(1);
        g.g2 = ScalarMatrix::identity(2);
        g.g3 = {Scalar(Rat(1, 3)), sc(0)};
        CHECK_THROWS_WITH_AS(braid_apply(g, {1}), doctest::Contains("not exactly representable"),
                             std::domain_error);
        g.g1.at(0, 1) = sc(0);
        BraidTriple ok = braid_apply(g, {1});
        CHECK(ok.g1 == ScalarMatrix::identity(2));
    }
}

TEST_CASE("braid action in the float shadow: paper example and relations at 1e-12") {
    Rng rng(2718);
    mpfr_prec_t bits = 128;
    for (int it = 0; it < 20; ++it) {
        Scalar a = sc(2), b = sc(3), c = sc(5), al = sc(7), be = sc(11), ga = sc(13);
        BraidTriple g;
        g.g1 = ScalarMatrix::identity(3);
        g.g1.at(0, 1) = a;
        g.g1.at(0, 2) = b;
        g.g1.at(1, 2) = c;
        g.g2 = ScalarMatrix::identity(3);
        g.g2.at(1, 0) = al;
        g.g2.at(2, 0) = be;
        g.g2.at(2, 1) = ga;
        std::vector<Scalar> d{rng.scalar(4, 7), rng.scalar(4, 7), rng.scalar(4, 7)};
        g.g3 = d;
        BraidTripleF gf = BraidTripleF::from_exact(g, bits);

        BraidTripleF b1 = braid_apply_float(gf, {1}, bits);
        CFloat hb = CFloat::exp2pii(d[1] - d[0], bits);
        CHECK((b1.g2.at(1, 0) - hb * CFloat::from_scalar(a, bits)).abs().to_double() < 1e-12);
        CFloat expect20 = hb * CFloat::from_scalar(a * be, bits) + CFloat::from_scalar(ga, bits);
        CHECK((b1.g2.at(2, 0) - expect20).abs().to_double() < 1e-12);
        CHECK((b1.g1.at(1, 2) - CFloat::from_scalar(b - a * c, bits)).abs().to_double() < 1e-12);

        BraidTripleF lhs = braid_apply_float(gf, {1, 2, 1}, bits);
        BraidTripleF rhs = braid_apply_float(gf, {2, 1, 2}, bits);
        CHECK(fd_dist(lhs.g1, rhs.g1) < 1e-12);
        CHECK(fd_dist(lhs.g2, rhs.g2) < 1e-12);

        BraidTripleF cen = braid_apply_float(gf, center_word(3), bits);
        CMatrix conj(3, 3, bits), conj_inv(3, 3, bits);
        for (int i = 0; i < 3; ++i) {
            conj.at(i, i) = CFloat::exp2pii(d[static_cast<size_t>(i)], bits);
            conj_inv.at(i, i) = CFloat::exp2pii(-d[static_cast<size_t>(i)], bits);
        }
        CHECK(fd_dist(cen.g1, conj_inv * gf.g1 * conj) < 1e-12);
        CHECK(fd_dist(cen.g2, conj_inv * gf.g2 * conj) < 1e-12);
    }

    // float relations on larger random triples, n = 5
    for (int it = 0; it < 5; ++it) {
        int n = 5;
        BraidTriple g;
        g.g1 = ScalarMatrix::identity(n);
        g.g2 = ScalarMatrix::identity(n);
        for (int i = 0; i < n; ++i) {
            g.g3.push_back(rng.scalar(3, 5));
            for (int j = i + 1; j < n; ++j) {
                g.g1.at(i, j) = sc(rng.range(-3, 3));
                g.g2.at(j, i) = sc(rng.range(-3, 3));
            }
        }
        BraidTripleF gf = BraidTripleF::from_exact(g, bits);
        for (int i = 1; i <= 3; ++i) {
            BraidTripleF lhs = braid_apply_float(gf, {i, i + 1, i}, bits);
            BraidTripleF rhs = braid_apply_float(gf, {i + 1, i, i + 1}, bits);
            CHECK(fd_dist(lhs.g1, rhs.g1) < 1e-12);
            CHECK(fd_dist(lhs.g2, rhs.g2) < 1e-12);
        }
        BraidTripleF ab = braid_apply_float(gf, {1, 4}, bits);
        BraidTripleF ba = braid_apply_float(gf, {4, 1}, bits);
        CHECK(fd_dist(ab.g1, ba.g1) < 1e-12);
        CHECK(fd_dist(ab.g2, ba.g2) < 1e-12);
    }
}

TEST_CASE("braid on datum: permutation case, C-transform, center vs deck") {
    // S1 = S2 = 1: pure permutation action
    {
        MonodromyDatum m = trivial_datum();
        m.u = {sc(1), sc(0)};
        m.B.at(0, 0) = sc(2);
        m.B.at(1, 1) = sc(3);
        m.D.at(0, 0) = sc(2);
        m.D.at(1, 1) = sc(3);
        MonodromyDatum d = braid_on_datum(m, 1);
        CHECK(d.u == m.u);  // branches swap and the order is re-established
        CHECK(d.B.at(0, 0) == sc(3));
        CHECK(d.S1 == m.S1);
        CHECK(d.C.at(0, 1) == sc(1));
        CHECK(d.C.at(0, 0) == sc(0));
    }
    // n = 2 with lower entry s: C -> C [[0,1],[1,s]]^{-1}
    {
        MonodromyDatum m = trivial_datum();
        m.u = {sc(1), sc(0)};
        m.S2.at(1, 0) = sc(4);
        MonodromyDatum d = braid_on_datum(m, 1);
        ScalarMatrix b2 = ScalarMatrix::identity(2);
        b2.at(0, 0) = sc(0);
        b2.at(0, 1) = sc(1);
        b2.at(1, 0) = sc(1);
        b2.at(1, 1) = sc(4);
        CHECK(d.C == m.C * b2);
        MonodromyDatum back = braid_on_datum(d, -1);
        CHECK(back.S1 == m.S1);
        CHECK(back.S2 == m.S2);
        CHECK(back.C == m.C);
        CHECK(back.u == m.u);
    }
    // non-triangular input is refused
    {
        MonodromyDatum m = trivial_datum();
        m.S1.at(1, 0) = sc(1);
        CHECK_THROWS_WITH_AS(braid_on_datum(m, 1), doctest::Contains("lexicographic"),
                             std::domain_error);
    }
    // closure, exact path: with S1 trivial the hbar factor multiplies a zero
    // entry, so one exact mutation applies even with fractional exponents
    {
        MonodromyDatum m = consistent_datum(Scalar(Rat(1, 3)), Scalar(Rat(-1, 5)), Scalar(0),
                                            Scalar(Rat(1, 7)));
        REQUIRE(m.S1 == ScalarMatrix::identity(2));
        REQUIRE(validate_datum(m).pass());
        MonodromyDatum img = braid_on_datum(m, 1);
        CHECK(validate_datum(img).pass());
    }
    // closure, float shadow: the cyclic identity survives braid words
    {
        MonodromyDatum m = consistent_datum(Scalar(Rat(1, 3)), Scalar(Rat(-1, 5)),
                                            Scalar(Rat(1, 2)), Scalar(Rat(1, 7)));
        REQUIRE(validate_datum(m).pass());
        mpfr_prec_t bits = 192;
        for (const BraidWord& w : {BraidWord{1}, BraidWord{-1}, BraidWord{1, 1, -1}}) {
            FloatDatumImage img = braid_on_datum_float(m, w, bits);
            CMatrix eb(2, 2, bits);
            for (int i = 0; i < 2; ++i) {
                // e^{2 pi i b} for the float diagonal b
                BigFloat two_pi = BigFloat::from_long(2, bits) * BigFloat::pi(bits);
                CFloat z = img.b[static_cast<size_t>(i)];
                eb.at(i, i) = CFloat::exp(CFloat(-(two_pi * z.im), two_pi * z.re));
            }
            CMatrix lhs = img.s1.inverse() * eb * img.s2.inverse();
            CMatrix rhs = img.c.inverse() * exp2pii_float(m.L, bits) * img.c;
            CHECK(fd_dist(lhs, rhs) < 1e-10);
        }
    }
    // float-mode datum files: hbar is evaluated in the shadow and
    // re-rationalized, so mutations apply and stay valid at tolerance
    {
        MonodromyDatum m = consistent_datum(Scalar(Rat(1, 3)), Scalar(Rat(-1, 5)),
                                            Scalar(Rat(1, 2)), Scalar(Rat(1, 7)));
        REQUIRE(validate_datum(m).pass());
        MonodromyDatum img = braid_on_datum(m, 1);
        CHECK(validate_datum(img).pass());
        MonodromyDatum back = braid_on_datum(img, -1);
        CHECK(validate_datum(back).pass());
        CHECK(back.S1 == m.S1);
        CHECK(back.C == m.C);
    }
    // center of B_2 versus the deck action in the float shadow
    {
        MonodromyDatum m = consistent_datum(Scalar(Rat(1, 7)), Scalar(Rat(2, 9)), Scalar(Rat(1, 3)),
                                            Scalar(Rat(1, 11)));
        mpfr_prec_t bits = 192;
        FloatDatumImage cen = braid_on_datum_float(m, center_word(2), bits);
        FloatDatumImage deck = deck_on_datum_float(m, 1, bits);
        CHECK(fd_dist(cen.s1, deck.s1) < 1e-12);
        CHECK(fd_dist(cen.s2, deck.s2) < 1e-12);
        CHECK(fd_dist(cen.c, deck.c) < 1e-12);
        CHECK(cen.u == deck.u);
    }
}

TEST_CASE("stokes factorization: n = 2 single factors, n = 3 back-substitution") {
    ExactAngle tau{Rat(0), Rat(0)};
    {
        MonodromyDatum m = trivial_datum();
        m.u = {sc(1), sc(0)};
        m.S1.at(0, 1) = sc(3);
        m.S2.at(1, 0) = sc(5);
        StokesFactorization f = stokes_factorization(m.S1, m.S2, m.u, tau);
        REQUIRE(f.factors_s1.size() == 1);
        REQUIRE(f.factors_s2.size() == 1);
        CHECK(f.factors_s1[0].k == m.S1);
        CHECK(f.factors_s2[0].k == m.S2);
        CHECK_FALSE(f.collinear_grouping);
    }
    {
        MonodromyDatum m = trivial_datum();
        StokesFactorization f = stokes_factorization(m.S1, m.S2, m.u, tau);
        for (const auto& g : f.factors_s1) CHECK(g.k == ScalarMatrix::identity(2));
        for (const auto& g : f.factors_s2) CHECK(g.k == ScalarMatrix::identity(2));
    }
    // n = 3 dense upper: three single-pair factors, products reproduce S
    {
        std::vector<Scalar> u{Scalar(Rat(2), Rat(2)), sc(1), sc(0)};
        LexOrder lo = lexicographic_order(u, tau);
        CHECK(lo.perm == std::vector<int>({0, 1, 2}));
        ScalarMatrix s1 = ScalarMatrix::identity(3);
        s1.at(0, 1) = sc(2);
        s1.at(0, 2) = sc(3);
        s1.at(1, 2) = sc(5);
        ScalarMatrix s2 = ScalarMatrix::identity(3);
        s2.at(1, 0) = sc(7);
        s2.at(2, 0) = sc(11);
        s2.at(2, 1) = sc(13);
        StokesFactorization f = stokes_factorization(s1, s2, u, tau);
        CHECK(f.factors_s1.size() == 3);
        CHECK(f.factors_s2.size() == 3);
        ScalarMatrix p1 = ScalarMatrix::identity(3);
        for (const auto& g : f.factors_s1) p1 = p1 * g.k;
        CHECK(p1 == s1);
        ScalarMatrix p2 = ScalarMatrix::identity(3);
        for (const auto& g : f.factors_s2) p2 = p2 * g.k;
        CHECK(p2 == s2);
        for (const auto& g : f.factors_s1) CHECK(g.support.size() == 1);
        // back-substitution oracle for the middle S1 factor: with factors
        // K_a K_b K_c and single-entry supports, the (0,2) entry of S1 is
        // K_a(0,2)-independent: the middle factor carries its own entry
        // exactly when the composition of the outer two reproduces the rest;
        // verify entry algebra explicitly
        Scalar k01, k02, k12;
        for (const auto& g : f.factors_s1) {
            if (g.support[0] == std::make_pair(0, 1)) k01 = g.k.at(0, 1);
            if (g.support[0] == std::make_pair(0, 2)) k02 = g.k.at(0, 2);
            if (g.support[0] == std::make_pair(1, 2)) k12 = g.k.at(1, 2);
        }
        CHECK(k01 == s1.at(0, 1));
        CHECK(k12 == s1.at(1, 2));
        // the (0,2) entry composes as k02 + possibly k01 k12 depending on the
        // ray order; re-multiplying fixed it above, algebra cross-check:
        bool ok = (k02 == s1.at(0, 2)) || (k02 + k01 * k12 == s1.at(0, 2));
        CHECK(ok);
    }
    // coalescent configuration: vanishing condition enforced, factors exact
    {
        std::vector<Scalar> u{sc(1), sc(1), sc(0)};
        ScalarMatrix s1 = ScalarMatrix::identity(3);
        s1.at(0, 2) = sc(2);
        s1.at(1, 2) = sc(3);
        ScalarMatrix s2 = ScalarMatrix::identity(3);
        s2.at(2, 0) = sc(5);
        s2.at(2, 1) = sc(7);
        StokesFactorization f = stokes_factorization(s1, s2, u, tau);
        ScalarMatrix p1 = ScalarMatrix::identity(3);
        for (const auto& g : f.factors_s1) p1 = p1 * g.k;
        CHECK(p1 == s1);
        s1.at(0, 1) = sc(1);
        CHECK_THROWS_WITH_AS(stokes_factorization(s1, s2, u, tau),
                             doctest::Contains("vanishing"), std::domain_error);
    }
}

TEST_CASE("stokes factorization round trip on random unitriangular pairs") {
    Rng rng(31415);
    ExactAngle tau{Rat(0), Rat(0)};
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(rng.range(0, 2));
        std::vector<Scalar> u;
        long base = 2 * n + 2;
        for (int i = 0; i < n; ++i) {
            if (it % 4 == 0 && i % 2 == 1) {
                u.push_back(u.back());  // exact coalescence
            } else {
                u.push_back(Scalar(Rat(base), rng.rational(2, 3)));
                base -= 2;
            }
        }
        ScalarMatrix s1 = ScalarMatrix::identity(n), s2 = ScalarMatrix::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (u[static_cast<size_t>(i)] == u[static_cast<size_t>(j)]) continue;
                s1.at(i, j) = sc(rng.range(-5, 5));
                s2.at(j, i) = sc(rng.range(-5, 5));
            }
        StokesFactorization f = stokes_factorization(s1, s2, u, tau);
        ScalarMatrix p1 = ScalarMatrix::identity(n), p2 = ScalarMatrix::identity(n);
        for (const auto& g : f.factors_s1) p1 = p1 * g.k;
        for (const auto& g : f.factors_s2) p2 = p2 * g.k;
        CHECK(p1 == s1);
        CHECK(p2 == s2);
    }
}

TEST_CASE("jump matrices: trivial cases and node consistency") {
    mpfr_prec_t bits = 128;
    // B = 0, S2 = 1 on the plus-infinity arc: H = 1
    {
        MonodromyDatum m = trivial_datum();
        m.u = {sc(1), sc(0)};
        m.S1.at(0, 1) = sc(2);
        ZPoint z{Rat(3), ExactAngle{Rat(0), Rat(0)}};
        CMatrix h = jump_matrix(m, ContourArc::PlusInf, z);
        CHECK(fd_dist(h, CMatrix::identity(2, bits)) < 1e-30);
    }
    // circle-1 with C = 1, L = D = B = 0: H = e^{zU}
    {
        MonodromyDatum m = trivial_datum();
        m.u = {sc(1), sc(0)};
        m.S1.at(0, 1) = sc(2);
        m.S2.at(1, 0) = sc(3);
        ZPoint z{Rat(1, 2), ExactAngle{Rat(-1, 2), Rat(0)}};
        CMatrix h = jump_matrix(m, ContourArc::Circle1, z);
        BigFloat r = BigFloat::from_rat(Rat(1, 2), bits);
        for (int i = 0; i < 2; ++i) {
            BigFloat ur = BigFloat::from_rat(m.u[static_cast<size_t>(i)].re(), bits) * r;
            CFloat expect(BigFloat::cos(ur), -BigFloat::sin(ur));
            CHECK((h.at(i, i) - expect).abs().to_double() < 1e-30);
        }
        CHECK(h.at(0, 1).abs().to_double() < 1e-30);
    }
    // off-arc points are rejected
    {
        MonodromyDatum m = trivial_datum();
        ZPoint z{Rat(1), ExactAngle{Rat(1, 4), Rat(0)}};
        CHECK_THROWS_WITH_AS(jump_matrix(m, ContourArc::PlusInf, z), doctest::Contains("off"),
                             std::domain_error);
        CHECK_THROWS_AS(jump_matrix(m, ContourArc::Circle1, ZPoint{Rat(1), ExactAngle{Rat(1, 2), Rat(0)}}),
                        std::domain_error);
    }
    // node T2: H_{+inf} H_2 H_1^{-1} = 1 identically, any datum
    {
        MonodromyDatum m = consistent_datum(Scalar(Rat(1, 3)), Scalar(Rat(-1, 5)),
                                            Scalar(Rat(1, 2)), Scalar(Rat(1, 7)), 192);
        m.D.at(0, 0) = sc(1);
        m.D.at(1, 1) = sc(-1);
        m.B.at(0, 0) += sc(1);
        m.B.at(1, 1) += sc(-1);  // keep the trace identity
        for (const Rat& rr : {Rat(1), Rat(3)}) {
            ZPoint zt2{rr, ExactAngle{Rat(0), Rat(0)}};
            CMatrix hplus = jump_matrix(m, ContourArc::PlusInf, zt2);
            CMatrix h1 = jump_matrix(m, ContourArc::Circle1, zt2);
            CMatrix h2 = jump_matrix(m, ContourArc::Circle2, zt2);
            CMatrix prod = hplus * h2 * h1.inverse();
            CHECK(fd_dist(prod, CMatrix::identity(2, prod.prec())) < 1e-25);
        }
    }
    // node T1: H_1(z_-)^{-1} H_{-inf}(z_-) H_2(z_+) = 1 reduces to the cyclic
    // identity; exact-integer datum satisfying the cyclic identity exactly
    {
        MonodromyDatum m = trivial_datum();
        m.u = {sc(1), sc(0)};
        m.C.at(0, 1) = sc(3);
        m.D.at(0, 0) = sc(2);
        m.D.at(1, 1) = sc(-1);
        m.B.at(0, 0) = sc(2);
        m.B.at(1, 1) = sc(-1);
        REQUIRE(validate_datum(m).pass());
        for (const Rat& rr : {Rat(1), Rat(2)}) {
            ZPoint zminus{rr, ExactAngle{Rat(-1), Rat(0)}};
            ZPoint zplus{rr, ExactAngle{Rat(1), Rat(0)}};
            CMatrix h1 = jump_matrix(m, ContourArc::Circle1, zminus);
            CMatrix hminus = jump_matrix(m, ContourArc::MinusInf, zminus);
            CMatrix h2 = jump_matrix(m, ContourArc::Circle2, zplus);
            CMatrix prod = h1.inverse() * hminus * h2;
            CHECK(fd_dist(prod, CMatrix::identity(2, prod.prec())) < 1e-25);
        }
        // and a datum violating the cyclic identity breaks the T1 node product
        MonodromyDatum bad = m;
        bad.S1.at(0, 1) = sc(1);
        ZPoint zminus{Rat(1), ExactAngle{Rat(-1), Rat(0)}};
        ZPoint zplus{Rat(1), ExactAngle{Rat(1), Rat(0)}};
        CMatrix h1 = jump_matrix(bad, ContourArc::Circle1, zminus);
        CMatrix hminus = jump_matrix(bad, ContourArc::MinusInf, zminus);
        CMatrix h2 = jump_matrix(bad, ContourArc::Circle2, zplus);
        CMatrix prod = h1.inverse() * hminus * h2;
        CHECK(fd_dist(prod, CMatrix::identity(2, prod.prec())) > 1e-6);
    }
}

TEST_CASE("frobenius flags: transpose identity and Stokes-from-metric") {
    mpfr_prec_t bits = 192;
    MonodromyDatum m = trivial_datum();
    m.u = {sc(1), sc(0)};
    m.D.at(0, 0) = sc(1);
    m.L.at(0, 0) = Scalar(Rat(-1, 2));
    m.L.at(1, 1) = Scalar(Rat(-1, 2));
    m.eta = ScalarMatrix(2, 2);
    m.eta->at(0, 1) = sc(1);
    m.eta->at(1, 0) = sc(1);
    m.mode = NumericMode::Float;
    m.float_bits = bits;
    {
        Scalar chalf(Rat(0), Rat(1, 2));
        m.C = ScalarMatrix::identity(2);
        m.C.at(0, 1) = chalf;
        CMatrix cinv = to_cmatrix(m.C.inverse(), bits);
        CMatrix muexp(2, 2, bits);
        muexp.at(0, 0) = CFloat::exp2pii(Scalar(Rat(1, 4)), bits);
        muexp.at(1, 1) = CFloat::exp2pii(Scalar(Rat(-1, 4)), bits);
        CMatrix etainv = to_cmatrix(m.eta->inverse(), bits);
        CMatrix cinv_t(2, 2, bits);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) cinv_t.at(i, j) = cinv.at(j, i);
        CMatrix rhs = cinv * muexp * etainv * cinv_t;
        ScalarMatrix s1(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) s1.at(i, j) = rationalize_cf(rhs.at(i, j));
        m.S1 = s1;
        m.S2 = s1.inverse().transpose();
        ValidationReport fr = validate_frobenius_flags(m);
        CHECK(fr.pass());
        MonodromyDatum bad = m;
        bad.S1.at(0, 1) += sc(1);
        bad.S2 = bad.S1.inverse().transpose();
        ValidationReport fb = validate_frobenius_flags(bad);
        CHECK_FALSE(fb.pass());
    }
}

TEST_CASE("moduli dimensions") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(moduli_dimension(n, "flatF") == n * n);
        CHECK(moduli_dimension(n, "frobenius") == n * (n - 1) / 2);
    }
    CHECK(moduli_dimension(3, "flatF") == 9);
    CHECK(moduli_dimension(3, "frobenius") == 3);
    CHECK(moduli_dimension(1, "flatF") == 1);
    CHECK_THROWS_AS(moduli_dimension(0, "flatF"), std::invalid_argument);
    CHECK_THROWS_AS(moduli_dimension(2, "other"), std::invalid_argument);
}
