#include "fixtures.hpp"
#include "series/linalg.hpp"

#include <doctest.h>

using namespace orifold;
using testing::exp_jet;

namespace {

FormalSeries random_series(testing::Rng& rng, int nvars, int order, int terms) {
    FormalSeries s(nvars, order);
    for (int t = 0; t < terms; ++t) {
        MultiIndex m(nvars);
        int deg = static_cast<int>(rng.range(0, order));
        for (int d = 0; d < deg; ++d) m[static_cast<int>(rng.range(0, nvars - 1))] += 1;
        s.set_coeff(m, s.coeff(m) + rng.scalar(6, 4, true));
    }
    return s;
}

// brute-force convolution oracle, independent of FormalSeries::operator*
Scalar conv_oracle(const FormalSeries& a, const FormalSeries& b, const MultiIndex& m) {
    Scalar acc;
    for (const auto& [ma, ca] : a.terms()) {
        MultiIndex mb;
        if (!m.minus(ma, mb)) continue;
        acc += ca * b.coeff(mb);
    }
    return acc;
}

}  // namespace

TEST_CASE("series multiplication: spec examples") {
    // (1 + t1)(1 - t1) at order 2 = 1 - t1^2
    FormalSeries one = FormalSeries::constant(Scalar(1), 2, 2);
    FormalSeries t1 = FormalSeries::variable(0, 2, 2);
    FormalSeries prod = (one + t1) * (one - t1);
    FormalSeries expect = one;
    MultiIndex sq(2);
    sq[0] = 2;
    expect.set_coeff(sq, Scalar(-1));
    CHECK(prod == expect);

    // a * 1 = a
    testing::Rng rng(7);
    FormalSeries a = random_series(rng, 2, 4, 8);
    CHECK(a * FormalSeries::constant(Scalar(1), 2, 4) == a);

    // exp-jet squared at order 4: sum 2^k (t2)^k / k!
    FormalSeries e4 = exp_jet(1, 2, 4);
    FormalSeries sq2 = e4 * e4;
    Rat fact(1);
    for (int k = 0; k <= 4; ++k) {
        if (k > 0) fact = fact * Rat(k);
        MultiIndex m(2);
        m[1] = static_cast<uint32_t>(k);
        CHECK(sq2.coeff(m) == Scalar(Rat(1 << k) / fact));
        CHECK(sq2.coeff(m) == conv_oracle(e4, e4, m));
    }
}

TEST_CASE("differentiation and integration: spec examples") {
    FormalSeries t1sq(2, 4);
    MultiIndex m(2);
    m[0] = 2;
    t1sq.set_coeff(m, Scalar(1));
    FormalSeries d = t1sq.diff(0);
    CHECK(d.coeff(MultiIndex::unit(2, 0)) == Scalar(2));
    CHECK(t1sq.diff(1).is_zero());

    // termwise oracle on the exp jet
    FormalSeries e4 = exp_jet(1, 2, 4);
    CHECK(e4.diff(1).equal_up_to_order(exp_jet(1, 2, 3)));

    // integrate 1 dt1 = t1; integrate 2 t1 dt1 = t1^2
    FormalSeries one = FormalSeries::constant(Scalar(1), 2, 3);
    CHECK(one.integrate(0).coeff(MultiIndex::unit(2, 0)) == Scalar(1));
    FormalSeries two_t1 = Scalar(2) * FormalSeries::variable(0, 2, 3);
    CHECK(two_t1.integrate(0).coeff(m) == Scalar(1));

    // integrate e_3(t2) dt2 = e_4(t2) - 1
    FormalSeries e3 = exp_jet(1, 2, 3);
    FormalSeries integ = e3.integrate(1);
    FormalSeries expect = exp_jet(1, 2, 4) - FormalSeries::constant(Scalar(1), 2, 4);
    CHECK(integ == expect);
    CHECK(integ.constant_term().is_zero());
}

TEST_CASE("diff after integrate is the identity") {
    testing::Rng rng(11);
    for (int it = 0; it < 20; ++it) {
        FormalSeries a = random_series(rng, 3, 5, 10);
        int v = static_cast<int>(rng.range(0, 2));
        CHECK(a.integrate(v).diff(v) == a);
    }
}

TEST_CASE("ring axioms hold exactly on random series") {
    testing::Rng rng(13);
    for (int it = 0; it < 12; ++it) {
        FormalSeries a = random_series(rng, 2, 6, 8);
        FormalSeries b = random_series(rng, 2, 6, 8);
        FormalSeries c = random_series(rng, 2, 6, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("series inverse and exp") {
    FormalSeries s = FormalSeries::constant(Scalar(2), 1, 6) + FormalSeries::variable(0, 1, 6);
    CHECK((s * s.inverse()).equal_up_to_order(FormalSeries::constant(Scalar(1), 1, 6)));
    FormalSeries x = FormalSeries::variable(0, 1, 5);
    CHECK(x.exp() == exp_jet(0, 1, 5));
    CHECK_THROWS(FormalSeries::zero(1, 3).inverse());
}

TEST_CASE("series matrix inverse: spec examples and round trips") {
    // identity
    SeriesMatrix id = SeriesMatrix::identity(3, 2, 4);
    CHECK((id.inverse() - id).is_zero());

    // diag(1 + t1, 2) -> diag(sum (-t1)^k, 1/2)
    SeriesMatrix d(2, 2, 2, 4);
    d.at(0, 0) = FormalSeries::constant(Scalar(1), 2, 4) + FormalSeries::variable(0, 2, 4);
    d.at(1, 1) = FormalSeries::constant(Scalar(2), 2, 4);
    SeriesMatrix dinv = d.inverse();
    for (int k = 0; k <= 4; ++k) {
        MultiIndex m(2);
        m[0] = static_cast<uint32_t>(k);
        CHECK(dinv.at(0, 0).coeff(m) == Scalar(k % 2 ? -1 : 1));
    }
    CHECK(dinv.at(1, 1).constant_term() == Scalar(Rat(1, 2)));

    // constant involution [[0,1],[1,0]]
    SeriesMatrix sw(2, 2, 2, 3);
    sw.at(0, 1) = FormalSeries::constant(Scalar(1), 2, 3);
    sw.at(1, 0) = FormalSeries::constant(Scalar(1), 2, 3);
    SeriesMatrix swinv = sw.inverse();
    CHECK((swinv - sw).is_zero());

    // random two-sided round trip
    testing::Rng rng(17);
    for (int it = 0; it < 6; ++it) {
        SeriesMatrix m(3, 3, 2, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = random_series(rng, 2, 4, 4);
        // force invertible constant term
        for (int i = 0; i < 3; ++i)
            m.at(i, i) += FormalSeries::constant(Scalar(5), 2, 4);
        SeriesMatrix minv = m.inverse();
        CHECK((m * minv - SeriesMatrix::identity(3, 2, 4)).is_zero());
        CHECK((minv * m - SeriesMatrix::identity(3, 2, 4)).is_zero());
    }

    // singular constant term is refused
    SeriesMatrix bad(2, 2, 1, 3);
    bad.at(0, 0) = FormalSeries::variable(0, 1, 3);
    bad.at(1, 1) = FormalSeries::constant(Scalar(1), 1, 3);
    CHECK_THROWS(bad.inverse());
}

TEST_CASE("truncation-order bookkeeping follows the min rule") {
    FormalSeries a(2, 5), b(2, 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(a.diff(0).order() == 4);
    CHECK(a.integrate(0).order() == 6);
    CHECK_THROWS(a.set_coeff([] {
        MultiIndex m(2);
        m[0] = 6;
        return m;
    }(), Scalar(1)));
}

TEST_CASE("composition and reversion support") {
    // compose F(t) = t1^2 with t1 = x + x^2 at order 4: x^2 + 2x^3 + x^4
    FormalSeries f(1, 4);
    MultiIndex m2(1);
    m2[0] = 2;
    f.set_coeff(m2, Scalar(1));
    FormalSeries sub = FormalSeries::variable(0, 1, 4);
    MultiIndex msq(1);
    msq[0] = 2;
    FormalSeries x2(1, 4);
    x2.set_coeff(msq, Scalar(1));
    FormalSeries composed = f.compose({sub + x2});
    CHECK(composed.coeff(msq) == Scalar(1));
    MultiIndex m3(1);
    m3[0] = 3;
    CHECK(composed.coeff(m3) == Scalar(2));
}

TEST_CASE("exact linear systems and nullspace") {
    LinearSystem sys;
    sys.add_row({{0, Scalar(1)}, {1, Scalar(1)}}, Scalar(3));
    sys.add_row({{0, Scalar(1)}, {1, Scalar(-1)}}, Scalar(1));
    auto sol = sys.solve_unique();
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Scalar(2));
    CHECK((*sol)[1] == Scalar(1));

    LinearSystem bad;
    bad.add_row({{0, Scalar(1)}}, Scalar(1));
    bad.add_row({{0, Scalar(1)}}, Scalar(2));
    CHECK_FALSE(bad.solve().has_value());

    std::vector<std::vector<Scalar>> rows{{Scalar(1), Scalar(2), Scalar(3)}};
    auto basis = nullspace(rows, 3);
    CHECK(basis.size() == 2);
    for (const auto& v : basis)
        CHECK((v[0] + Scalar(2) * v[1] + Scalar(3) * v[2]).is_zero());
}

TEST_CASE("characteristic polynomial and spectral projectors") {
    ScalarMatrix m(2, 2);
    m.at(0, 1) = Scalar(2);
    m.at(1, 0) = Scalar(2);
    QiPoly p = char_poly(m);  // x^2 - 4
    CHECK(p.c[0] == Scalar(-4));
    CHECK(p.c[1] == Scalar(0));
    CHECK(p.c[2] == Scalar(1));
    auto spec = simple_spectrum(m);
    REQUIRE(spec.has_value());
    CHECK(spec->eigenvalues[0] == Scalar(-2));
    CHECK(spec->eigenvalues[1] == Scalar(2));
    // projector identities
    ScalarMatrix sum = spec->projectors[0] + spec->projectors[1];
    CHECK(sum == ScalarMatrix::identity(2));
    CHECK(spec->projectors[0] * spec->projectors[1] == ScalarMatrix(2, 2));
}
